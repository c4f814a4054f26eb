#pragma once

// Fusion rules, 6j-symbol tables and the pentagon check.
//
// Labels are indexed 0..rank-1. Multiplicity labels (alpha, beta, ...) are
// 1-based: a quadruple (i, j, m, alpha) is admissable when
// 1 <= alpha <= N^{ij}_m.

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/report.hpp"
#include "sfc/scalars.hpp"

namespace sfc {

struct Quadruple {
  int i = 0, j = 0, m = 0, alpha = 1;
  auto operator<=>(const Quadruple&) const = default;
};

/// (i, j, m, k, n, t, alpha, beta, eta, phi): the index set of
/// F^{ijm,alpha beta}_{knt,eta phi}.
struct Decuple {
  int i = 0, j = 0, m = 0, k = 0, n = 0, t = 0;
  int alpha = 1, beta = 1, eta = 1, phi = 1;
  auto operator<=>(const Decuple&) const = default;

  Quadruple first() const { return {i, j, m, alpha}; }   // (i,j,m,alpha)
  Quadruple second() const { return {m, k, n, beta}; }   // (m,k,n,beta)
  Quadruple third() const { return {j, k, t, eta}; }     // (j,k,t,eta)
  Quadruple fourth() const { return {i, t, n, phi}; }    // (i,t,n,phi)
  std::vector<int> as_vector() const { return {i, j, m, k, n, t, alpha, beta, eta, phi}; }
};

struct Channel {
  int target;
  int multiplicity;
};

using MultiplicityKey = std::array<int, 3>;

class FusionData {
public:
  /// Throws StructureError on an empty label set, duplicate labels, an
  /// out-of-range index or a negative multiplicity. Zero multiplicities are
  /// dropped.
  FusionData(std::vector<std::string> labels, int unit, const std::map<MultiplicityKey, int>& mult);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int unit() const { return unit_; }
  std::optional<int> find_label(std::string_view name) const;

  int N(int i, int j, int m) const { return dense_[index(i, j, m)]; }
  /// Nonzero channels of X_i (x) X_j, ascending by target.
  std::span<const Channel> channels(int i, int j) const;
  const std::map<MultiplicityKey, int>& multiplicities() const { return mult_; }

  bool is_admissible(const Quadruple& q) const;
  bool is_admissible(const Decuple& d) const;

  friend bool operator==(const FusionData& a, const FusionData& b) {
    return a.labels_ == b.labels_ && a.unit_ == b.unit_ && a.mult_ == b.mult_;
  }

private:
  std::size_t index(int i, int j, int m) const {
    const auto r = static_cast<std::size_t>(rank());
    return (static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)) * r + static_cast<std::size_t>(m);
  }

  std::vector<std::string> labels_;
  int unit_;
  std::map<MultiplicityKey, int> mult_;
  std::vector<int> dense_;
  std::vector<std::vector<Channel>> channels_;
};

/// Sparse map decuple -> scalar. Explicitly stored zeros are kept so that a
/// known zero is distinguishable from an absent entry.
class SixJTable {
public:
  void set(const Decuple& d, Cyclotomic value) { entries_[d] = std::move(value); }
  const Cyclotomic* find(const Decuple& d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? nullptr : &it->second;
  }
  Cyclotomic value(const Decuple& d) const {
    const auto* v = find(d);
    return v ? *v : Cyclotomic();
  }
  bool contains(const Decuple& d) const { return entries_.count(d) != 0; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Decuple, Cyclotomic>& entries() const { return entries_; }
  std::map<Decuple, Cyclotomic>& entries() { return entries_; }

  friend bool operator==(const SixJTable&, const SixJTable&) = default;

private:
  std::map<Decuple, Cyclotomic> entries_;
};

/// Unit law, fusion-ring associativity and existence of duals.
CheckReport validate_fusion(const FusionData& data, const VerifyOptions& opts = {});

/// Triples (i, j, m) with N^{ij}_m > 0 in lexicographic order.
std::vector<MultiplicityKey> admissible_triples(const FusionData& data);

/// Every admissable decuple in lexicographic order.
std::vector<Decuple> admissible_decuples(const FusionData& data);

/// Free indices of one pentagon instance. The LHS sums over
/// (t, eta, varphi, kappa) and the RHS over epsilon.
struct PentagonInstance {
  int i, j, k, l, m, n, p, q, s;
  int alpha, beta, chi, gamma, delta, phi;
  std::vector<int> as_vector() const {
    return {i, j, k, l, m, n, p, q, s, alpha, beta, chi, gamma, delta, phi};
  }
};

const std::vector<std::string>& pentagon_index_names();

/// Sign bit multiplying the right-hand side of an instance (0 for the
/// ordinary pentagon).
using PentagonSign = std::function<Bit(const PentagonInstance&)>;

/// Evaluates every pentagon instance over admissable chains and records
/// those where the two sides differ. Workers split the outer (i,j,k,l)
/// range; results are merged in index order so the report does not depend
/// on the worker count. `table` is assumed structurally valid.
CheckReport evaluate_pentagon(const FusionData& data, const SixJTable& table, const PentagonSign& sign,
                              std::string name, const VerifyOptions& opts);

/// Throws StructureError if an entry sits on a non-admissable decuple.
void require_admissible_support(const FusionData& data, const SixJTable& table);

/// Admissable decuples accepted by `required` that are absent from `table`.
std::vector<Decuple> missing_entries(const FusionData& data, const SixJTable& table,
                                     const std::function<bool(const Decuple&)>& required);

CheckReport check_pentagon(const FusionData& data, const SixJTable& table, const VerifyOptions& opts = {});

/// For each (i, j, k, n), the block with rows (m, alpha, beta) and columns
/// (t, eta, phi) must be square and invertible.
CheckReport check_6j_invertibility(const FusionData& data, const SixJTable& table, const VerifyOptions& opts = {});

/// Exact determinant by Gaussian elimination over the cyclotomic field.
/// Square input required.
Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> matrix);

}  // namespace sfc
