#include "sfc/superfusion.hpp"

namespace sfc {

std::string to_string(ObjectType t) { return t == ObjectType::bosonic ? "bosonic" : "majorana"; }

SuperFusionData::SuperFusionData(FusionData base, const std::map<Quadruple, Bit>& parities,
                                 std::vector<ObjectType> types)
    : base_(std::move(base)), parities_(parities), types_(std::move(types)) {
  const int r = base_.rank();
  if (static_cast<int>(types_.size()) != r) throw StructureError("object type list does not match the label count");
  for (const auto& [q, s] : parities_) {
    if (!base_.is_admissible(q))
      throw StructureError("parity given for non-admissable quadruple (" + std::to_string(q.i) + "," +
                           std::to_string(q.j) + "," + std::to_string(q.m) + "," + std::to_string(q.alpha) + ")");
    if (s > 1) throw StructureError("parity must be 0 or 1");
  }
  const auto ru = static_cast<std::size_t>(r);
  offsets_.assign(ru * ru * ru, 0);
  for (const auto& [key, n] : base_.multiplicities()) {
    const std::size_t idx = (static_cast<std::size_t>(key[0]) * ru + static_cast<std::size_t>(key[1])) * ru +
                            static_cast<std::size_t>(key[2]);
    offsets_[idx] = bits_.size();
    for (int a = 1; a <= n; ++a) {
      auto it = parities_.find({key[0], key[1], key[2], a});
      if (it == parities_.end())
        throw StructureError("missing parity for admissable quadruple (" + std::to_string(key[0]) + "," +
                             std::to_string(key[1]) + "," + std::to_string(key[2]) + "," + std::to_string(a) + ")");
      bits_.push_back(it->second);
    }
  }
}

Bit SuperFusionData::parity(int i, int j, int m, int alpha) const {
  const auto r = static_cast<std::size_t>(rank());
  const std::size_t idx =
      (static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)) * r + static_cast<std::size_t>(m);
  return bits_[offsets_[idx] + static_cast<std::size_t>(alpha - 1)];
}

CheckReport validate_superfusion(const SuperFusionData& data, const VerifyOptions& opts) {
  CheckReport report;
  report.name = "superfusion-rules";
  report.index_names = {"a", "b", "c", "d"};
  ViolationCollector out(opts.max_violations);
  const FusionData& f = data.base();
  const int r = f.rank();
  const int u = f.unit();

  ++report.instances_checked;
  if (data.is_majorana(u)) out.add({{u}, "unit object must be Bosonic", std::nullopt, std::nullopt});

  for (const auto& [key, n] : f.multiplicities()) {
    const auto [i, j, m] = key;
    if (!(data.is_majorana(i) || data.is_majorana(j) || data.is_majorana(m))) continue;
    int odd = 0;
    for (int a = 1; a <= n; ++a) odd += data.parity(i, j, m, a);
    ++report.instances_checked;
    if (2 * odd != n)
      out.add({{i, j, m}, "Majorana parity balance (#even == #odd)", Cyclotomic(n - odd), Cyclotomic(odd)});
  }

  for (int j = 0; j < r; ++j)
    for (int m = 0; m < r; ++m) {
      const int expect = j == m ? data.end_dimension(j) : 0;
      ++report.instances_checked;
      if (f.N(u, j, m) != expect)
        out.add({{j, m}, "left unit law N^{1,a}_b = delta dim End", Cyclotomic(f.N(u, j, m)), Cyclotomic(expect)});
      if (f.N(j, u, m) != expect)
        out.add({{j, m}, "right unit law N^{a,1}_b = delta dim End", Cyclotomic(f.N(j, u, m)), Cyclotomic(expect)});
    }
  for (int j = 0; j < r; ++j) {
    if (data.is_majorana(j) || f.N(u, j, j) != 1) continue;
    if (data.parity(u, j, j, 1) != 0 || data.parity(j, u, j, 1) != 0)
      out.add({{j}, "unit isomorphism of a Bosonic object must be even", std::nullopt, std::nullopt});
  }

  // (X_i (x) X_j) contains N^{ij}_m / dim End(X_m) copies of X_m; both sides
  // are scaled by 2 to stay integral.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int n = 0; n < r; ++n) {
          long lhs = 0, rhs = 0;
          for (const auto& c : f.channels(i, j))
            lhs += 2L / data.end_dimension(c.target) * c.multiplicity * f.N(c.target, k, n);
          for (const auto& c : f.channels(j, k))
            rhs += 2L / data.end_dimension(c.target) * c.multiplicity * f.N(i, c.target, n);
          ++report.instances_checked;
          if (lhs != rhs)
            out.add({{i, j, k, n}, "associativity (End-weighted)", Cyclotomic(Rational(lhs, 2)),
                     Cyclotomic(Rational(rhs, 2))});
        }

  for (int i = 0; i < r; ++i) {
    int duals = 0;
    bool right_dim = true;
    for (int j = 0; j < r; ++j) {
      const int n = f.N(i, j, u);
      if (n == 0) continue;
      ++duals;
      if (n != data.end_dimension(i)) right_dim = false;
    }
    ++report.instances_checked;
    if (duals != 1 || !right_dim)
      out.add({{i}, "duality: expected one j with N^{a,j}_1 = dim End(X_a)", Cyclotomic(duals), Cyclotomic(1)});
  }
  out.write_to(report);
  return report;
}

Classification classify_objects(const SuperFusionData& data) {
  const FusionData& f = data.base();
  const int u = f.unit();
  if (data.is_majorana(u)) throw StructureError("the unit object is always Bosonic");
  Classification c;
  c.types = data.types();
  for (int i = 0; i < f.rank(); ++i) {
    const int n = f.N(u, i, i);
    const std::string& name = f.labels()[static_cast<std::size_t>(i)];
    if (data.is_majorana(i)) {
      if (n != 2 || data.parity(u, i, i, 1) == data.parity(u, i, i, 2))
        throw StructureError("object '" + name + "' is marked Majorana but End(X) is not k^{1|1}");
      ++c.majorana;
    } else {
      if (n != 1 || data.parity(u, i, i, 1) != 0)
        throw StructureError("object '" + name + "' is marked Bosonic but End(X) is not k^{1|0}");
      ++c.bosonic;
    }
  }
  return c;
}

bool is_parity_admissible(const SuperFusionData& data, const Decuple& d) {
  if (!data.base().is_admissible(d)) throw StructureError("decuple is not admissable");
  return ((data.parity(d.first()) + data.parity(d.second()) + data.parity(d.third()) + data.parity(d.fourth())) & 1) ==
         0;
}

CheckReport check_support(const SuperFusionData& data, const FermionicSixJTable& table, const VerifyOptions& opts) {
  CheckReport report;
  report.name = "parity-support";
  report.index_names = {"i", "j", "m", "k", "n", "t", "alpha", "beta", "eta", "phi"};
  ViolationCollector out(opts.max_violations);
  for (const auto& [d, v] : table.entries()) {
    ++report.instances_checked;
    if (v.is_zero()) continue;
    if (!data.base().is_admissible(d))
      out.add({d.as_vector(), "entry on non-admissable decuple", v, std::nullopt});
    else if (!is_parity_admissible(data, d))
      out.add({d.as_vector(), "entry on decuple that is not parity admissable", v, std::nullopt});
  }
  out.write_to(report);
  return report;
}

CheckReport check_super_pentagon(const SuperFusionData& data, const FermionicSixJTable& table,
                                 const VerifyOptions& opts) {
  require_admissible_support(data.base(), table);
  for (const auto& [d, v] : table.entries())
    if (!v.is_zero() && !is_parity_admissible(data, d))
      throw StructureError("fermionic 6j entry on a decuple that is not parity admissable");

  auto sign = [&data](const PentagonInstance& x) -> Bit {
    return static_cast<Bit>(data.parity(x.i, x.j, x.m, x.alpha) & data.parity(x.k, x.l, x.q, x.delta));
  };
  CheckReport report = evaluate_pentagon(data.base(), table, sign, "super-pentagon", opts);
  const auto missing =
      missing_entries(data.base(), table, [&data](const Decuple& d) { return is_parity_admissible(data, d); });
  report.missing_entries = missing.size();
  for (std::size_t x = 0; x < missing.size() && x < opts.max_violations; ++x) {
    std::string idx;
    for (int v : missing[x].as_vector()) idx += (idx.empty() ? "" : ",") + std::to_string(v);
    report.notes.push_back("missing parity admissable entry (" + idx + ")");
  }
  return report;
}

}  // namespace sfc
