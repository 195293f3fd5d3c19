#include "contrakt/reductions.hpp"

#include <algorithm>
#include <map>

namespace contrakt {

namespace gadget_labels {
std::string bin(int i) { return "b_" + std::to_string(i); }
std::string slot(int j) { return "d_" + std::to_string(j); }
std::string item(int x) { return "t_" + std::to_string(x); }
std::string item_unit(int x, int p) {
  return "alpha_" + std::to_string(x) + "_" + std::to_string(p);
}
}  // namespace gadget_labels

namespace {

// Picks `base` or the first free suffixed variant, so generated labels never
// collide with instance labels.
Label fresh_label(const std::set<Label>& taken, const Label& base) {
  if (!taken.count(base)) return base;
  for (int i = 1;; ++i) {
    Label cand = base + "_" + std::to_string(i);
    if (!taken.count(cand)) return cand;
  }
}

std::set<Label> all_vertices(const MulticoloredCliqueInstance& inst) {
  std::set<Label> all;
  for (const auto& cls : inst.color_classes) all.insert(cls.begin(), cls.end());
  return all;
}

}  // namespace

void validate_instance(const MulticoloredCliqueInstance& inst) {
  if (inst.color_classes.empty()) throw MalformedInstance("no color classes");
  std::set<Label> seen;
  for (const auto& cls : inst.color_classes) {
    if (cls.empty()) throw MalformedInstance("empty color class");
    for (const auto& v : cls) {
      if (!seen.insert(v).second)
        throw MalformedInstance("vertex '" + v + "' appears in two color classes");
    }
  }
  for (const auto& [a, b] : inst.edges) {
    if (a == b) throw MalformedInstance("self-loop on '" + a + "'");
    if (!seen.count(a) || !seen.count(b))
      throw MalformedInstance("edge (" + a + ", " + b + ") leaves the instance");
  }
}

void validate_instance(const BinPackingInstance& inst) {
  if (inst.capacity < 1) throw MalformedInstance("capacity must be positive");
  if (inst.bins < 1) throw MalformedInstance("bin count must be positive");
  if (inst.item_sizes.empty()) throw MalformedInstance("no items");
  for (int a : inst.item_sizes) {
    if (a < 1) throw MalformedInstance("item sizes must be positive");
  }
}

GadgetInstance mcq_to_contractibility(const MulticoloredCliqueInstance& inst) {
  validate_instance(inst);
  const int k = static_cast<int>(inst.color_classes.size());

  std::set<Label> taken = all_vertices(inst);
  std::vector<std::set<Label>> classes = inst.color_classes;
  for (int i = 0; i < k; ++i) {
    Label pad = fresh_label(taken, "pad_" + std::to_string(i + 1));
    taken.insert(pad);
    classes[static_cast<size_t>(i)].insert(pad);
  }
  std::vector<Label> selectors;
  for (int i = 0; i < k; ++i) {
    Label t = fresh_label(taken, "t_" + std::to_string(i + 1));
    taken.insert(t);
    selectors.push_back(t);
  }

  GraphBuilder hb;
  for (const auto& cls : classes) {
    for (const auto& v : cls) hb.add_vertex(v);
    for (auto it = cls.begin(); it != cls.end(); ++it) {
      for (auto jt = std::next(it); jt != cls.end(); ++jt) hb.add_edge(*it, *jt);
    }
  }
  for (const auto& [a, b] : inst.edges) hb.add_edge(a, b);
  LabeledGraph h = hb.build();

  GraphBuilder gb;
  for (const auto& v : h.labels()) gb.add_vertex(v);
  for (const auto& [a, b] : h.edge_list()) gb.add_edge(a, b);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j)
      gb.add_edge(selectors[static_cast<size_t>(i)], selectors[static_cast<size_t>(j)]);
    gb.add_vertex(selectors[static_cast<size_t>(i)]);
    for (const auto& v : classes[static_cast<size_t>(i)])
      gb.add_edge(selectors[static_cast<size_t>(i)], v);
  }

  GadgetInstance out;
  out.g = gb.build();
  out.h = std::move(h);
  out.k = k;
  out.provenance = "mcq_to_contractibility(k=" + std::to_string(k) + ")";
  return out;
}

GadgetInstance binpacking_to_contractibility(const BinPackingInstance& inst) {
  validate_instance(inst);
  const int C = inst.capacity;
  const int k = inst.bins;
  const int n = static_cast<int>(inst.item_sizes.size());
  long long total = 0;
  for (int a : inst.item_sizes) total += a;
  if (total != static_cast<long long>(C) * k)
    throw ImperfectTotal("item sizes sum to " + std::to_string(total) + ", expected C*k = " +
                         std::to_string(static_cast<long long>(C) * k));

  using namespace gadget_labels;

  GraphBuilder hb;
  for (int i = 0; i < k; ++i) {
    hb.add_vertex(bin(i));
    for (int j = i + 1; j < k; ++j) hb.add_edge(bin(i), bin(j));
  }
  for (int j = 0; j < C * k; ++j) {
    hb.add_vertex(slot(j));
    for (int j2 = j + 1; j2 < C * k; ++j2) hb.add_edge(slot(j), slot(j2));
    hb.add_edge(bin(j / C), slot(j));
  }
  LabeledGraph h = hb.build();

  GraphBuilder gb;
  for (const auto& v : h.labels()) gb.add_vertex(v);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) gb.add_edge(bin(i), bin(j));
  }
  for (int j = 0; j < C * k; ++j) {
    for (int j2 = j + 1; j2 < C * k; ++j2) gb.add_edge(slot(j), slot(j2));
  }
  for (int x = 0; x < n; ++x) {
    gb.add_vertex(item(x));
    for (int i = 0; i < k; ++i) gb.add_edge(item(x), bin(i));
    for (int p = 0; p < inst.item_sizes[static_cast<size_t>(x)]; ++p) {
      gb.add_edge(item_unit(x, p), item(x));
      for (int j = 0; j < C * k; ++j) gb.add_edge(item_unit(x, p), slot(j));
    }
  }

  GadgetInstance out;
  out.g = gb.build();
  out.h = std::move(h);
  out.k = n + C * k;
  out.provenance = "binpacking_to_contractibility(C=" + std::to_string(C) +
                   ", k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
  return out;
}

GadgetInstance mcq_to_mcc_degen4(const MulticoloredCliqueInstance& inst,
                                 std::optional<int> extra_count) {
  validate_instance(inst);
  const int k = static_cast<int>(inst.color_classes.size());
  if (k < 2) throw MalformedInstance("degeneracy-4 gadget needs at least 2 color classes");
  const int K = 2 * (k + k * (k - 1) / 2);
  const int extras = extra_count.value_or(4 * k * k * k);
  if (extras < 0) throw MalformedInstance("negative extra_count");

  GadgetInstance out;
  out.k = K;
  if (extras <= 2 * K)
    out.warnings.push_back("extra_count " + std::to_string(extras) + " does not exceed 2K = " +
                           std::to_string(2 * K) + "; equivalence with the source instance is unproven");

  std::set<Label> taken = all_vertices(inst);
  auto fresh = [&taken](const Label& base) {
    Label l = fresh_label(taken, base);
    taken.insert(l);
    return l;
  };

  // Class index per vertex, for routing subdivision vertices.
  std::map<Label, int> cls_of;
  for (int i = 0; i < k; ++i) {
    for (const auto& v : inst.color_classes[static_cast<size_t>(i)]) cls_of[v] = i;
  }

  GraphBuilder gb;
  std::vector<Label> a(static_cast<size_t>(k)), b(static_cast<size_t>(k));
  std::vector<std::vector<Label>> vgrp(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    a[static_cast<size_t>(i)] = fresh("a_" + std::to_string(i + 1));
    b[static_cast<size_t>(i)] = fresh("b_" + std::to_string(i + 1));
    auto& grp = vgrp[static_cast<size_t>(i)];
    grp.assign(inst.color_classes[static_cast<size_t>(i)].begin(),
               inst.color_classes[static_cast<size_t>(i)].end());
    for (int p = 1; p <= extras; ++p)
      grp.push_back(fresh("Vx_" + std::to_string(i + 1) + "_" + std::to_string(p)));
    for (const auto& v : grp) {
      gb.add_edge(a[static_cast<size_t>(i)], v);
      gb.add_edge(b[static_cast<size_t>(i)], v);
    }
  }

  std::map<std::pair<int, int>, Label> c, d;
  std::map<std::pair<int, int>, std::vector<Label>> zgrp;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      auto ij = std::make_pair(i, j);
      c[ij] = fresh("c_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      d[ij] = fresh("d_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      for (int p = 1; p <= extras; ++p)
        zgrp[ij].push_back(fresh("Zx_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) +
                                 "_" + std::to_string(p)));
    }
  }
  for (const auto& [x, y] : inst.edges) {
    int ci = cls_of.at(x);
    int cj = cls_of.at(y);
    if (ci == cj) continue;  // only cross-class edges are subdivided
    auto ij = std::make_pair(std::min(ci, cj), std::max(ci, cj));
    Label z = fresh("z_" + std::min(x, y) + "_" + std::max(x, y));
    zgrp[ij].push_back(z);
    gb.add_edge(x, z);
    gb.add_edge(y, z);
  }
  for (const auto& [ij, zs] : zgrp) {
    for (const auto& z : zs) {
      gb.add_edge(c.at(ij), z);
      gb.add_edge(d.at(ij), z);
    }
    // With no subdivision vertices and extras = 0 the hubs would be isolated;
    // they still belong to both graphs.
    gb.add_vertex(c.at(ij));
    gb.add_vertex(d.at(ij));
  }
  out.g = gb.build();

  GraphBuilder hb;
  for (const auto& v : out.g.labels()) hb.add_vertex(v);
  for (const auto& [x, y] : out.g.edge_list()) hb.add_edge(x, y);
  for (int i = 0; i < k; ++i) hb.add_edge(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      auto ij = std::make_pair(i, j);
      hb.add_edge(c.at(ij), d.at(ij));
      hb.add_edge(c.at(ij), a[static_cast<size_t>(i)]);
      hb.add_edge(c.at(ij), a[static_cast<size_t>(j)]);
    }
  }
  out.h = hb.build();
  out.provenance = "mcq_to_mcc_degen4(k=" + std::to_string(k) + ", extras=" +
                   std::to_string(extras) + ", K=" + std::to_string(K) + ")";
  return out;
}

std::optional<std::vector<Label>> solve_mcq_bruteforce(const MulticoloredCliqueInstance& inst,
                                                       long long cap) {
  validate_instance(inst);
  long long combos = 1;
  for (const auto& cls : inst.color_classes) {
    combos *= static_cast<long long>(cls.size());
    if (combos > cap)
      throw TooLarge("solve_mcq_bruteforce: more than " + std::to_string(cap) + " combinations");
  }

  const int k = static_cast<int>(inst.color_classes.size());
  std::vector<std::vector<Label>> classes;
  for (const auto& cls : inst.color_classes) classes.emplace_back(cls.begin(), cls.end());

  std::vector<size_t> pick(static_cast<size_t>(k), 0);
  while (true) {
    bool clique = true;
    for (int i = 0; i < k && clique; ++i) {
      for (int j = i + 1; j < k && clique; ++j) {
        if (!inst.has_edge(classes[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]],
                           classes[static_cast<size_t>(j)][pick[static_cast<size_t>(j)]]))
          clique = false;
      }
    }
    if (clique) {
      std::vector<Label> out;
      for (int i = 0; i < k; ++i)
        out.push_back(classes[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]]);
      return out;
    }
    int pos = 0;
    while (pos < k && pick[static_cast<size_t>(pos)] + 1 == classes[static_cast<size_t>(pos)].size()) {
      pick[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == k) break;
    ++pick[static_cast<size_t>(pos)];
  }
  return std::nullopt;
}

std::optional<std::vector<int>> solve_binpacking_bruteforce(const BinPackingInstance& inst,
                                                            long long cap) {
  validate_instance(inst);
  const int n = static_cast<int>(inst.item_sizes.size());
  const int k = inst.bins;
  long long combos = 1;
  for (int i = 0; i < n; ++i) {
    combos *= k;
    if (combos > cap)
      throw TooLarge("solve_binpacking_bruteforce: more than " + std::to_string(cap) +
                     " assignments");
  }

  std::vector<int> phi(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<long long> load(static_cast<size_t>(k), 0);
    for (int x = 0; x < n; ++x)
      load[static_cast<size_t>(phi[static_cast<size_t>(x)])] += inst.item_sizes[static_cast<size_t>(x)];
    bool perfect = true;
    for (long long l : load) {
      if (l != inst.capacity) perfect = false;
    }
    if (perfect) return phi;

    int pos = 0;
    while (pos < n && phi[static_cast<size_t>(pos)] + 1 == k) {
      phi[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++phi[static_cast<size_t>(pos)];
  }
  return std::nullopt;
}

MccEmbedding contractibility_as_mcc(const LabeledGraph& g, const LabeledGraph& h) {
  for (const auto& v : h.labels()) {
    if (!g.has_vertex(v))
      throw NotSubset("vertex '" + v + "' of h is not a vertex of g");
  }
  MccEmbedding out;
  out.g = g;
  out.h = h;
  out.k = g.vertex_count() - h.vertex_count();
  return out;
}

}  // namespace contrakt
