#include "abel/strata.hpp"

#include <map>

#include "abel/errors.hpp"

namespace abel {

StratumSignature signature(const DualGraph& g, int v, const Polarization& e) {
  g.check_vertex(v);
  const int p = g.vertex_count();
  if (e.size() != static_cast<std::size_t>(p)) throw Error(ErrorKind::BadIndex, "polarization size mismatch");
  if (sum(e) != Rational(0)) throw Error(ErrorKind::NonzeroDegree, "polarization has degree " + to_string(sum(e)));
  if (p > kMaxEnumerationVertices) throw Error(ErrorKind::TooManyVertices, "too many vertices for a signature");

  StratumSignature sig;
  sig.in_xi0 = true;
  const auto all = VertexSet::full(p);
  for (std::uint64_t bits = 1; bits < all.bits; ++bits) {
    const VertexSet subset{bits};
    if (!subset.contains(v)) continue;
    const int k = g.cut_size(subset);
    Rational s(k, 2);
    for (int i = 0; i < p; ++i) {
      if (subset.contains(i)) s += e[i];
    }
    sig.subsets.push_back(subset);
    sig.positions.push_back({floor(s), s.denominator() == 1});
    if (s < Rational(0) || s >= Rational(k)) sig.in_xi0 = false;
  }
  return sig;
}

bool same_stratum_signature(const DualGraph& g, int v, const Polarization& e1, const Polarization& e2) {
  return signature(g, v, e1) == signature(g, v, e2);
}

std::vector<StratumRepresentative> enumerate_stratum_representatives(const DualGraph& g, int v,
                                                                     std::int64_t denominator, std::int64_t bound) {
  if (denominator < 1 || bound < 0) throw Error(ErrorKind::BadIndex, "need denominator >= 1 and bound >= 0");
  const int p = g.vertex_count();
  const std::int64_t limit = bound * denominator;
  std::map<StratumSignature, Polarization> found;

  // odometer over the first p-1 numerators; the last one closes the degree
  std::vector<std::int64_t> numerators(static_cast<std::size_t>(p - 1), -limit);
  while (true) {
    std::int64_t total = 0;
    for (auto n : numerators) total += n;
    const std::int64_t last = -total;
    if (last >= -limit && last <= limit) {
      Polarization e;
      e.reserve(static_cast<std::size_t>(p));
      for (auto n : numerators) e.emplace_back(n, denominator);
      e.emplace_back(last, denominator);
      auto sig = signature(g, v, e);
      if (sig.in_xi0) found.try_emplace(std::move(sig), std::move(e));
    }
    std::size_t pos = 0;
    while (pos < numerators.size() && numerators[pos] == limit) numerators[pos++] = -limit;
    if (pos == numerators.size()) break;
    ++numerators[pos];
  }

  std::vector<StratumRepresentative> out;
  out.reserve(found.size());
  for (auto& [sig, e] : found) out.push_back({e, sig});
  return out;
}

}  // namespace abel
