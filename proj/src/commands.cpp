#include "abel/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "abel/errors.hpp"
#include "abel/strata.hpp"

namespace abel {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& ex) {
    err << "error: BadDocument: " << ex.what() << '\n';
    return kExitInputError;
  }
}

template <class T>
std::string tuple_string(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    if constexpr (std::is_same_v<T, Rational>) {
      out += to_string(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out + ")";
}

std::vector<std::string> rational_strings(const Polarization& e) {
  std::vector<std::string> out;
  for (const auto& x : e) out.push_back(to_string(x));
  return out;
}

std::string pair_label(const DualGraph& g, EdgePair pair) {
  return "(" + g.edge_label(pair.first) + ", " + g.edge_label(pair.second) + ")";
}

std::string choice_label(const PairChoice& c) {
  return "(" + std::to_string(c.end1 + 1) + "," + std::to_string(c.end2 + 1) + ")";
}

/// nullopt when e does not have degree 0.
std::optional<bool> xi0_membership(const AbelData& data) {
  if (data.f() != Rational(0)) return std::nullopt;
  return signature(data.graph(), data.v(), data.e()).in_xi0;
}

std::string signature_string(const StratumSignature& s) {
  std::string out;
  for (std::size_t j = 0; j < s.subsets.size(); ++j) {
    if (j > 0) out += " ";
    out += s.subsets[j].to_string() + ":" + std::to_string(s.positions[j].floor) + (s.positions[j].on_wall ? "w" : "+");
  }
  return out;
}

nlohmann::json sigma_json(const DualGraph& g, const SingularLocusReport& report) {
  auto out = nlohmann::json::array();
  for (const auto& pair : report.off_diagonal_sigma()) {
    auto choices = nlohmann::json::array();
    for (const auto& c : report.qtable.at(pair)) choices.push_back({c.end1 + 1, c.end2 + 1});
    out.push_back({{"first", g.edge_label(pair.first)}, {"second", g.edge_label(pair.second)}, {"choices", choices}});
  }
  return out;
}

// Histogram of Q-set sizes and the pairs with an empty Q-set.
struct QSummary {
  std::map<std::size_t, std::size_t> by_size;
  std::vector<EdgePair> empty;
};

QSummary summarize(const DualGraph& g, const SingularLocusReport& report) {
  QSummary out;
  for (int r = 0; r < g.edge_count(); ++r) {
    for (int s = 0; s < g.edge_count(); ++s) {
      const auto size = report.qtable.at({r, s}).size();
      ++out.by_size[size];
      if (size == 0) out.empty.push_back({r, s});
    }
  }
  return out;
}

void check_report_json(nlohmann::json& j, const AbelDataDocument& doc, const AbelData& data,
                       const SingularLocusReport& report) {
  const auto& g = data.graph();
  j["name"] = doc.name;
  j["vertices"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (int t = 0; t < g.edge_count(); ++t) edges.push_back(g.edge_label(t));
  j["edges"] = edges;
  j["v"] = data.v() + 1;
  j["q"] = data.q();
  j["e"] = rational_strings(data.e());
  j["f"] = to_string(data.f());
  const auto xi0 = xi0_membership(data);
  j["in_xi0"] = xi0 ? nlohmann::json(*xi0) : nlohmann::json(nullptr);
  j["solvable"] = report.solvable;
  j["sigma_off_diagonal"] = report.off_diagonal_sigma().size();
  j["sigma"] = sigma_json(g, report);
  const auto q = summarize(g, report);
  auto sizes = nlohmann::json::object();
  for (const auto& [size, count] : q.by_size) sizes[std::to_string(size)] = count;
  j["qtable_sizes"] = sizes;
  auto empty = nlohmann::json::array();
  for (const auto& pair : q.empty) empty.push_back({g.edge_label(pair.first), g.edge_label(pair.second)});
  j["empty_pairs"] = empty;
}

void check_report_text(std::ostream& out, const AbelDataDocument& doc, const AbelData& data,
                       const SingularLocusReport& report) {
  const auto& g = data.graph();
  out << "document: " << doc.name << '\n';
  out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  out << "edges:";
  for (int t = 0; t < g.edge_count(); ++t) out << ' ' << g.edge_label(t);
  out << '\n';
  out << "v: " << data.v() + 1 << '\n';
  out << "q: " << tuple_string(data.q()) << '\n';
  out << "e: " << tuple_string(data.e()) << '\n';
  const auto xi0 = xi0_membership(data);
  out << "e in Xi_0: " << (xi0 ? (*xi0 ? "yes" : "no") : "n/a (degree of e is not 0)") << '\n';
  out << "solvable: " << (report.solvable ? "yes" : "no") << '\n';
  const auto off = report.off_diagonal_sigma();
  out << "sigma: diagonal (" << g.edge_count() << " pairs) plus " << off.size() << " off-diagonal pairs\n";
  for (const auto& pair : off) {
    out << "  " << pair_label(g, pair) << "  choices";
    for (const auto& c : report.qtable.at(pair)) out << ' ' << choice_label(c);
    out << '\n';
  }
  const auto q = summarize(g, report);
  out << "Q-table: " << g.edge_count() * g.edge_count() << " pairs;";
  for (const auto& [size, count] : q.by_size) out << ' ' << count << " with " << size << " choices;";
  out << '\n';
  for (const auto& pair : q.empty) out << "  no quasistable choice at " << pair_label(g, pair) << '\n';
}

void verdict_json(nlohmann::json& j, const Verdict& v) {
  j["resolves"] = v.resolves;
  j["minimal"] = v.minimal;
  j["symmetric"] = v.symmetric;
  j["witness"] = v.witness;
}

void verdict_text(std::ostream& out, const Verdict& v) {
  out << "resolves: " << std::boolalpha << v.resolves << '\n';
  out << "resolves minimally: " << v.minimal << '\n';
  out << "symmetric: " << v.symmetric << '\n';
  out << "witness: " << v.witness << '\n';
}

}  // namespace

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load_document(args.document);
    const auto data = to_abel_data(doc);
    const auto report = singular_locus(data);
    if (args.json) {
      nlohmann::json j;
      check_report_json(j, doc, data, report);
      out << j.dump() << '\n';
    } else {
      check_report_text(out, doc, data, report);
    }
    return report.solvable ? kExitOk : kExitNegative;
  });
}

int cmd_resolve(const ResolveArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = load_document(args.document);
    const auto data = to_abel_data(doc);
    std::optional<BlowupSequence> given;
    if (args.verify_only) given = load_sequence(*args.verify_only, data.graph().vertex_count());
    if (args.max_len && *args.max_len < 0) throw Error(ErrorKind::BadIndex, "--max-len must be nonnegative");

    const auto report = singular_locus(data);
    nlohmann::json j;
    if (args.json) check_report_json(j, doc, data, report);
    else check_report_text(out, doc, data, report);

    auto finish = [&](const std::string& status, const std::optional<BlowupSequence>& seq,
                      const std::optional<Verdict>& verdict, int code) {
      if (args.json) {
        j["status"] = status;
        j["sequence"] = seq ? to_json(*seq) : nlohmann::json(nullptr);
        if (verdict) verdict_json(j, *verdict);
        out << j.dump() << '\n';
      } else {
        out << "status: " << status << '\n';
        if (seq) out << "sequence: " << seq->to_string() << '\n';
        if (verdict) verdict_text(out, *verdict);
      }
      return code;
    };

    if (!report.solvable) return finish("Unsolvable", given, std::nullopt, kExitNegative);
    if (given) {
      const auto verdict = verify(data, report, *given);
      const bool ok = verdict.minimal && verdict.symmetric;
      return finish(ok ? "Verified" : "Rejected", given, verdict, ok ? kExitOk : kExitNegative);
    }
    SearchOptions options;
    options.max_len = args.max_len;
    const auto found = search_minimal_symmetric(data, report, options);
    if (!found) {
      return finish("NotFoundWithinMaxLen (" + std::to_string(options.max_len.value_or(default_max_len(report))) + ")",
                    std::nullopt, std::nullopt, kExitNegative);
    }
    const auto verdict = verify(data, report, *found);
    const bool ok = verdict.minimal && verdict.symmetric;
    return finish(ok ? "Found" : "Rejected", found, verdict, ok ? kExitOk : kExitNegative);
  });
}

int cmd_delta(const DeltaArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto data = to_abel_data(load_document(args.document));
    const auto& g = data.graph();
    for (int label : {args.i, args.k, args.m, args.n}) {
      if (label < 1 || label > g.vertex_count()) {
        throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(label) + " outside 1.." +
                                             std::to_string(g.vertex_count()));
      }
    }
    const CorrectionTable table(data);
    const auto value = table.delta(args.i - 1, args.k - 1, args.m - 1, args.n - 1);
    const auto w = table.w(args.i - 1, args.k - 1);
    const std::vector<std::int64_t> twist(w.begin(), w.end());
    if (args.json) {
      out << nlohmann::json{{"i", args.i}, {"k", args.k}, {"m", args.m}, {"n", args.n}, {"delta", value}, {"w", twist}}
                 .dump()
          << '\n';
    } else {
      out << "delta(" << args.i << "," << args.k << "," << args.m << "," << args.n << ") = " << value << '\n';
      out << "w_(" << args.i << "," << args.k << ") = " << tuple_string(twist) << '\n';
    }
    return kExitOk;
  });
}

int cmd_strata(const StrataArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.denominator < 1) throw Error(ErrorKind::BadIndex, "--denominator must be positive");
    if (args.bound < 0) throw Error(ErrorKind::BadIndex, "--bound must be nonnegative");
    const auto doc = load_document(args.document);
    const auto g = DualGraph::from_intersection_matrix(doc.matrix);
    const int v = doc.v - 1;
    const auto reps = enumerate_stratum_representatives(g, v, args.denominator, args.bound);

    nlohmann::json rows = nlohmann::json::array();
    if (!args.json) {
      out << "grid: denominator " << args.denominator << ", bound " << args.bound << '\n';
      out << "strata found: " << reps.size() << '\n';
    }
    for (const auto& rep : reps) {
      nlohmann::json row{{"e", rational_strings(rep.e)}, {"signature", signature_string(rep.signature)}};
      std::string text = tuple_string(rep.e) + "  [" + signature_string(rep.signature) + "]";
      if (args.resolve) {
        const auto result = run_pipeline(AbelData(g, rep.e, fixed_q(g.vertex_count(), v), v));
        row["solvable"] = result.report.solvable;
        row["sigma_off_diagonal"] = result.sigma_off_diagonal;
        row["sequence"] = result.sequence ? to_json(*result.sequence) : nlohmann::json(nullptr);
        row["minimal"] = result.verdict.minimal && result.verdict.symmetric;
        text += "  solvable: " + std::string(result.report.solvable ? "yes" : "no") +
                "  |sigma off diagonal|: " + std::to_string(result.sigma_off_diagonal) +
                "  sequence: " + (result.sequence ? result.sequence->to_string() : std::string("none"));
      }
      rows.push_back(row);
      if (!args.json) out << text << '\n';
    }
    if (args.json) {
      out << nlohmann::json{{"denominator", args.denominator}, {"bound", args.bound}, {"strata", rows}}.dump() << '\n';
    }
    return kExitOk;
  });
}

int cmd_scan(const ScanArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(args.options);
    std::ofstream file(args.out, std::ios::app);
    if (!file) {
      err << "error: cannot open " << args.out.string() << " for appending\n";
      return kExitInputError;
    }
    const auto summary = run_scan(args.options, file);
    file.close();
    if (!file) {
      err << "error: failed writing " << args.out.string() << '\n';
      return kExitInputError;
    }
    if (args.json) {
      out << nlohmann::json{{"instances", summary.instances},
                            {"unsolvable", summary.unsolvable},
                            {"search_failures", summary.search_failures}}
                 .dump()
          << '\n';
    } else {
      out << "instances: " << summary.instances << '\n';
      out << "unsolvable: " << summary.unsolvable << '\n';
      out << "search failures: " << summary.search_failures << '\n';
    }
    return summary.unsolvable + summary.search_failures == 0 ? kExitOk : kExitNegative;
  });
}

}  // namespace abel
