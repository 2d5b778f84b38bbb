#include "exlab/wheels.hpp"

#include <algorithm>

#include "exlab/exchange.hpp"

namespace exlab {

namespace {

Graph wheel_graph(int n) {
  FamilySpec spec;
  spec.family = Family::wheel;
  spec.params = {n};
  return generate(spec);
}

// 1-based rim labels -> 0-based
VertexSet from_one_based(std::vector<int> labels) {
  for (int& v : labels) --v;
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace

GapStructure rim_gaps(int n, const VertexSet& s) {
  if (n < 3) throw DomainError("rim_gaps requires n >= 3");
  if (s.empty()) throw ParameterError("rim_gaps: landmark set is empty");
  GapStructure out;
  out.rim_size = n;
  out.landmarks = make_vertex_set(s, n + 1);
  if (!out.landmarks.empty() && out.landmarks.back() == n) {
    throw ParameterError("rim_gaps: the hub is not a rim vertex");
  }
  int k = static_cast<int>(out.landmarks.size());
  for (int i = 0; i < k; ++i) {
    int from = out.landmarks[i];
    int to = out.landmarks[(i + 1) % k];  // next landmark cyclically
    std::vector<int> run;
    for (int v = (from + 1) % n; v != to; v = (v + 1) % n) run.push_back(v);
    out.gaps.push_back(std::move(run));
  }
  return out;
}

bool is_resolving_wheel(int n, const VertexSet& s) {
  if (n < 7) {
    throw DomainError("gap criteria are stated for n >= 7; use the oracle below that");
  }
  if (s.empty()) return false;  // nothing distinguishes the rim from itself
  GapStructure gaps = rim_gaps(n, s);
  int k = static_cast<int>(gaps.gaps.size());
  int size_three = 0;
  for (int i = 0; i < k; ++i) {
    int size = static_cast<int>(gaps.gaps[i].size());
    if (size >= 4) return false;
    if (size == 3) ++size_three;
    if (size > 1) {
      int prev = static_cast<int>(gaps.gaps[(i + k - 1) % k].size());
      int next = static_cast<int>(gaps.gaps[(i + 1) % k].size());
      if (prev > 1 || next > 1) return false;
    }
  }
  return size_three <= 1;
}

VertexSet canonical_resolving_set(int n) {
  if (n < 7) throw DomainError("canonical_resolving_set requires n >= 7");
  std::vector<int> labels;  // 1-based, per the published families
  int k = n / 5;
  switch (n % 5) {
    case 0:  // {5i+1, 5i+4 : 0 <= i <= k-1}
      for (int i = 0; i < k; ++i) {
        labels.push_back(5 * i + 1);
        labels.push_back(5 * i + 4);
      }
      break;
    case 1:  // {5i+1, 5i+4 : 0 <= i <= k-2} + {n-5, n-1}
      // The printed tail {n-3, n-1} leaves a landmark flanked by a 2-gap and
      // a 3-gap, which the gap criteria forbid (and the oracle rejects, e.g.
      // vertices 3 and 5 collide for n = 11).  The {n-5, n-1} tail realizes
      // the intended (2,1)...(1,3,1) gap pattern.
      for (int i = 0; i + 1 < k; ++i) {
        labels.push_back(5 * i + 1);
        labels.push_back(5 * i + 4);
      }
      labels.push_back(n - 5);
      labels.push_back(n - 1);
      break;
    case 2:  // {1, 5} + {5i+2, 5(i+1) : 1 <= i <= k-1} + {n}
      labels.push_back(1);
      labels.push_back(5);
      for (int i = 1; i < k; ++i) {
        labels.push_back(5 * i + 2);
        labels.push_back(5 * (i + 1));
      }
      labels.push_back(n);
      break;
    case 3:
      if (n == 8) {
        labels = {1, 5, 7};
      } else {  // {5i+1, 5i+4 : 0 <= i <= k-2} + {n-7, n-3, n-1}
        for (int i = 0; i + 1 < k; ++i) {
          labels.push_back(5 * i + 1);
          labels.push_back(5 * i + 4);
        }
        labels.push_back(n - 7);
        labels.push_back(n - 3);
        labels.push_back(n - 1);
      }
      break;
    case 4:  // {5i+1, 5i+4 : 0 <= i <= k}
      for (int i = 0; i <= k; ++i) {
        labels.push_back(5 * i + 1);
        labels.push_back(5 * i + 4);
      }
      break;
  }
  VertexSet out = from_one_based(std::move(labels));
  if (static_cast<int>(out.size()) != (2 * n + 2) / 5 || !is_resolving_wheel(n, out)) {
    throw DomainError("canonical_resolving_set: family output failed its post-check");
  }
  return out;
}

std::pair<VertexSet, int> resolving_exchange_witness(int n) {
  if (n < 8) throw DomainError("resolving_exchange_witness requires n >= 8");

  if (n % 5 == 4) {
    // The published pair (canonical set, r = 3) is not a witness: swapping
    // out the last landmark n turns the wrap-around region into a legal
    // 3-gap, so S - {n} + {3} still resolves (verified by the oracle for
    // n = 9 and 14).  Fall back to the exhaustive search for the
    // lexicographically first certified witness.
    SearchBudget budget;
    ExchangeReport report =
        exchange_property(wheel_graph(n), SetKind::resolving, budget);
    if (report.holds || !report.witness) {
      throw DomainError("resolving_exchange_witness: no failure witness found");
    }
    return {report.witness->set, report.witness->replacement};
  }

  VertexSet s = canonical_resolving_set(n);
  int r_label;  // 1-based, per the residue-class proofs
  switch (n % 5) {
    case 0: r_label = 2; break;
    case 1: r_label = 2; break;
    case 2: r_label = 6; break;
    default: r_label = n == 8 ? 8 : 7; break;
  }
  int r = r_label - 1;
  if (!swap_candidates(wheel_graph(n), SetKind::resolving, s, r).empty()) {
    throw DomainError("resolving_exchange_witness: witness failed certification");
  }
  return {std::move(s), r};
}

MinimalSetCensus wheel_determining_pairs(int n) {
  if (n < 4) throw DomainError("wheel_determining_pairs requires n >= 4");
  std::vector<VertexSet> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (n % 2 == 0 && v - u == n / 2) continue;  // antipodal on the rim
      pairs.push_back({u, v});
    }
  }
  AutGroup group = automorphism_group(wheel_graph(n));
  return MinimalSetCensus::from_sets(SetKind::determining, std::move(pairs), group);
}

}  // namespace exlab
