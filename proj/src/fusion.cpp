#include "sfc/fusion.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace sfc {

FusionData::FusionData(std::vector<std::string> labels, int unit, const std::map<MultiplicityKey, int>& mult)
    : labels_(std::move(labels)), unit_(unit) {
  if (labels_.empty()) throw StructureError("fusion data needs at least one label");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw StructureError("duplicate label '" + l + "'");
  const int r = rank();
  if (unit_ < 0 || unit_ >= r) throw StructureError("unit index out of range");
  dense_.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0);
  for (const auto& [key, n] : mult) {
    for (int x : key)
      if (x < 0 || x >= r) throw StructureError("multiplicity index out of range");
    if (n < 0) throw StructureError("negative multiplicity");
    if (n == 0) continue;
    mult_[key] = n;
    dense_[index(key[0], key[1], key[2])] = n;
  }
  channels_.resize(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  for (const auto& [key, n] : mult_)
    channels_[static_cast<std::size_t>(key[0]) * static_cast<std::size_t>(r) + static_cast<std::size_t>(key[1])]
        .push_back({key[2], n});
}

std::optional<int> FusionData::find_label(std::string_view name) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

std::span<const Channel> FusionData::channels(int i, int j) const {
  return channels_[static_cast<std::size_t>(i) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(j)];
}

bool FusionData::is_admissible(const Quadruple& q) const {
  const int r = rank();
  if (q.i < 0 || q.j < 0 || q.m < 0 || q.i >= r || q.j >= r || q.m >= r) return false;
  return q.alpha >= 1 && q.alpha <= N(q.i, q.j, q.m);
}

bool FusionData::is_admissible(const Decuple& d) const {
  return is_admissible(d.first()) && is_admissible(d.second()) && is_admissible(d.third()) &&
         is_admissible(d.fourth());
}

CheckReport validate_fusion(const FusionData& data, const VerifyOptions& opts) {
  CheckReport report;
  report.name = "fusion-rules";
  report.index_names = {"a", "b", "c", "d"};
  ViolationCollector out(opts.max_violations);
  const int r = data.rank();
  const int u = data.unit();

  for (int j = 0; j < r; ++j) {
    for (int m = 0; m < r; ++m) {
      const int expect = j == m ? 1 : 0;
      ++report.instances_checked;
      if (data.N(u, j, m) != expect)
        out.add({{j, m}, "left unit law N^{1,a}_b", Cyclotomic(data.N(u, j, m)), Cyclotomic(expect)});
      if (data.N(j, u, m) != expect)
        out.add({{j, m}, "right unit law N^{a,1}_b", Cyclotomic(data.N(j, u, m)), Cyclotomic(expect)});
    }
  }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int n = 0; n < r; ++n) {
          long lhs = 0, rhs = 0;
          for (const auto& c : data.channels(i, j)) lhs += static_cast<long>(c.multiplicity) * data.N(c.target, k, n);
          for (const auto& c : data.channels(j, k)) rhs += static_cast<long>(c.multiplicity) * data.N(i, c.target, n);
          ++report.instances_checked;
          if (lhs != rhs) out.add({{i, j, k, n}, "associativity", Cyclotomic(lhs), Cyclotomic(rhs)});
        }

  for (int i = 0; i < r; ++i) {
    int duals = 0;
    bool simple = true;
    for (int j = 0; j < r; ++j) {
      const int n = data.N(i, j, u);
      if (n >= 1) ++duals;
      if (n > 1) simple = false;
    }
    ++report.instances_checked;
    if (duals != 1 || !simple)
      out.add({{i}, "duality: expected exactly one j with N^{a,j}_1 = 1", Cyclotomic(duals), Cyclotomic(1)});
  }
  out.write_to(report);
  return report;
}

std::vector<MultiplicityKey> admissible_triples(const FusionData& data) {
  std::vector<MultiplicityKey> out;
  out.reserve(data.multiplicities().size());
  for (const auto& [key, n] : data.multiplicities()) out.push_back(key);
  return out;
}

std::vector<Decuple> admissible_decuples(const FusionData& data) {
  std::vector<Decuple> out;
  const int r = data.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (const auto& cm : data.channels(i, j))
        for (int k = 0; k < r; ++k)
          for (const auto& cn : data.channels(cm.target, k))
            for (const auto& ct : data.channels(j, k)) {
              const int nphi = data.N(i, ct.target, cn.target);
              for (int a = 1; a <= cm.multiplicity; ++a)
                for (int b = 1; b <= cn.multiplicity; ++b)
                  for (int e = 1; e <= ct.multiplicity; ++e)
                    for (int f = 1; f <= nphi; ++f)
                      out.push_back({i, j, cm.target, k, cn.target, ct.target, a, b, e, f});
            }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::string>& pentagon_index_names() {
  static const std::vector<std::string> names{"i", "j", "k", "l", "m", "n", "p", "q", "s",
                                              "alpha", "beta", "chi", "gamma", "delta", "phi"};
  return names;
}

namespace {

struct PentagonSides {
  Cyclotomic lhs, rhs;
};

PentagonSides evaluate_instance(const FusionData& data, const SixJTable& f, const PentagonInstance& x) {
  Cyclotomic lhs, rhs;
  for (const auto& ct : data.channels(x.j, x.k)) {
    const int t = ct.target;
    const int n_phi = data.N(x.i, t, x.n);
    const int n_kappa = data.N(t, x.l, x.s);
    if (n_phi == 0 || n_kappa == 0) continue;
    for (int eta = 1; eta <= ct.multiplicity; ++eta)
      for (int varphi = 1; varphi <= n_phi; ++varphi) {
        const auto* f1 = f.find({x.i, x.j, x.m, x.k, x.n, t, x.alpha, x.beta, eta, varphi});
        if (!f1) continue;
        for (int kappa = 1; kappa <= n_kappa; ++kappa) {
          const auto* f2 = f.find({x.i, t, x.n, x.l, x.p, x.s, varphi, x.chi, kappa, x.gamma});
          if (!f2) continue;
          const auto* f3 = f.find({x.j, x.k, t, x.l, x.s, x.q, eta, kappa, x.delta, x.phi});
          if (!f3) continue;
          lhs += *f1 * *f2 * *f3;
        }
      }
  }
  const int n_eps = data.N(x.m, x.q, x.p);
  for (int eps = 1; eps <= n_eps; ++eps) {
    const auto* g1 = f.find({x.m, x.k, x.n, x.l, x.p, x.q, x.beta, x.chi, x.delta, eps});
    if (!g1) continue;
    const auto* g2 = f.find({x.i, x.j, x.m, x.q, x.p, x.s, x.alpha, eps, x.phi, x.gamma});
    if (!g2) continue;
    rhs += *g1 * *g2;
  }
  return {std::move(lhs), std::move(rhs)};
}

struct ChunkResult {
  ViolationCollector violations;
  std::size_t instances = 0;
};

void run_chunk(const FusionData& data, const SixJTable& f, const PentagonSign& sign, std::size_t begin,
               std::size_t end, ChunkResult& result) {
  const auto r = static_cast<std::size_t>(data.rank());
  for (std::size_t outer = begin; outer < end; ++outer) {
    const int l = static_cast<int>(outer % r);
    const int k = static_cast<int>((outer / r) % r);
    const int j = static_cast<int>((outer / r / r) % r);
    const int i = static_cast<int>(outer / r / r / r);
    for (const auto& cm : data.channels(i, j))
      for (const auto& cn : data.channels(cm.target, k))
        for (const auto& cp : data.channels(cn.target, l))
          for (const auto& cq : data.channels(k, l))
            for (const auto& cs : data.channels(j, cq.target)) {
              const int n_gamma = data.N(i, cs.target, cp.target);
              if (n_gamma == 0) continue;
              for (int alpha = 1; alpha <= cm.multiplicity; ++alpha)
                for (int beta = 1; beta <= cn.multiplicity; ++beta)
                  for (int chi = 1; chi <= cp.multiplicity; ++chi)
                    for (int delta = 1; delta <= cq.multiplicity; ++delta)
                      for (int phi = 1; phi <= cs.multiplicity; ++phi)
                        for (int gamma = 1; gamma <= n_gamma; ++gamma) {
                          const PentagonInstance x{i,     j,    k,   l,     cm.target, cn.target, cp.target, cq.target,
                                                   cs.target, alpha, beta, chi, gamma, delta,     phi};
                          auto sides = evaluate_instance(data, f, x);
                          if (sign && (sign(x) & 1U)) sides.rhs = -sides.rhs;
                          ++result.instances;
                          if (!(sides.lhs == sides.rhs))
                            result.violations.add({x.as_vector(), "", std::move(sides.lhs), std::move(sides.rhs)});
                        }
            }
  }
}

}  // namespace

CheckReport evaluate_pentagon(const FusionData& data, const SixJTable& table, const PentagonSign& sign,
                              std::string name, const VerifyOptions& opts) {
  CheckReport report;
  report.name = std::move(name);
  report.index_names = pentagon_index_names();
  const auto r = static_cast<std::size_t>(data.rank());
  const std::size_t outer = r * r * r * r;
  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(outer, 1));

  std::vector<ChunkResult> chunks;
  chunks.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) chunks.push_back({ViolationCollector(opts.max_violations), 0});
  auto bounds = [&](std::size_t w) { return std::pair{outer * w / jobs, outer * (w + 1) / jobs}; };

  if (jobs == 1) {
    run_chunk(data, table, sign, 0, outer, chunks[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      const auto [b, e] = bounds(w);
      workers.emplace_back([&, b = b, e = e, w] { run_chunk(data, table, sign, b, e, chunks[w]); });
    }
  }

  ViolationCollector merged(opts.max_violations);
  for (auto& c : chunks) {
    report.instances_checked += c.instances;
    merged.merge(std::move(c.violations));
  }
  merged.write_to(report);
  return report;
}

void require_admissible_support(const FusionData& data, const SixJTable& table) {
  for (const auto& [d, v] : table.entries()) {
    if (!data.is_admissible(d)) {
      std::string idx;
      for (int x : d.as_vector()) idx += (idx.empty() ? "" : ",") + std::to_string(x);
      throw StructureError("6j entry on non-admissable decuple (" + idx + ")");
    }
  }
}

std::vector<Decuple> missing_entries(const FusionData& data, const SixJTable& table,
                                     const std::function<bool(const Decuple&)>& required) {
  std::vector<Decuple> out;
  for (const auto& d : admissible_decuples(data))
    if ((!required || required(d)) && !table.contains(d)) out.push_back(d);
  return out;
}

namespace {

std::string describe(const FusionData& data, const Decuple& d) {
  const auto& L = data.labels();
  auto lab = [&](int x) { return L[static_cast<std::size_t>(x)]; };
  return "F^{" + lab(d.i) + "," + lab(d.j) + "," + lab(d.m) + ";" + std::to_string(d.alpha) + "," +
         std::to_string(d.beta) + "}_{" + lab(d.k) + "," + lab(d.n) + "," + lab(d.t) + ";" + std::to_string(d.eta) +
         "," + std::to_string(d.phi) + "}";
}

}  // namespace

CheckReport check_pentagon(const FusionData& data, const SixJTable& table, const VerifyOptions& opts) {
  require_admissible_support(data, table);
  CheckReport report = evaluate_pentagon(data, table, nullptr, "pentagon", opts);
  const auto missing = missing_entries(data, table, nullptr);
  report.missing_entries = missing.size();
  for (std::size_t x = 0; x < missing.size() && x < opts.max_violations; ++x)
    report.notes.push_back("missing entry " + describe(data, missing[x]));
  return report;
}

Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> a) {
  const std::size_t n = a.size();
  Cyclotomic det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return Cyclotomic();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Cyclotomic inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Cyclotomic factor = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

CheckReport check_6j_invertibility(const FusionData& data, const SixJTable& table, const VerifyOptions& opts) {
  require_admissible_support(data, table);
  CheckReport report;
  report.name = "6j-invertibility";
  report.index_names = {"i", "j", "k", "n"};
  ViolationCollector out(opts.max_violations);
  const int r = data.rank();
  struct Row {
    int m, alpha, beta;
  };
  struct Col {
    int t, eta, phi;
  };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int n = 0; n < r; ++n) {
          std::vector<Row> rows;
          std::vector<Col> cols;
          for (const auto& cm : data.channels(i, j))
            for (int a = 1; a <= cm.multiplicity; ++a)
              for (int b = 1; b <= data.N(cm.target, k, n); ++b) rows.push_back({cm.target, a, b});
          for (const auto& ct : data.channels(j, k))
            for (int e = 1; e <= ct.multiplicity; ++e)
              for (int f = 1; f <= data.N(i, ct.target, n); ++f) cols.push_back({ct.target, e, f});
          if (rows.empty() && cols.empty()) continue;
          ++report.instances_checked;
          if (rows.size() != cols.size()) {
            out.add({{i, j, k, n},
                     "non-square block " + std::to_string(rows.size()) + "x" + std::to_string(cols.size()),
                     std::nullopt,
                     std::nullopt});
            continue;
          }
          std::vector<std::vector<Cyclotomic>> block(rows.size(), std::vector<Cyclotomic>(cols.size()));
          for (std::size_t x = 0; x < rows.size(); ++x)
            for (std::size_t y = 0; y < cols.size(); ++y)
              block[x][y] = table.value({i, j, rows[x].m, k, n, cols[y].t, rows[x].alpha, rows[x].beta, cols[y].eta,
                                         cols[y].phi});
          Cyclotomic det = determinant(std::move(block));
          if (det.is_zero()) out.add({{i, j, k, n}, "singular block", std::move(det), std::nullopt});
        }
  out.write_to(report);
  return report;
}

}  // namespace sfc
