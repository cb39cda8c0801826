#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hrg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a caller violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

using IndexSet = std::set<int>;

/// Integral weight in the basis of fundamental weights.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords.at(i); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Integral vector in the basis of simple roots.
struct RootVector {
  std::vector<int> coords;

  RootVector() = default;
  explicit RootVector(std::vector<int> c) : coords(std::move(c)) {}
  static RootVector simple(int rank, int i);

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords.at(i); }
  bool is_positive() const;  // nonzero with all coefficients >= 0
  bool is_negative() const;

  RootVector operator-() const;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

std::string to_string(const Weight& w);
std::string to_string(const RootVector& r);

/// Cartan datum of a finite-dimensional semisimple Lie algebra.
///
/// Entry `cartan(i, j)` is the pairing of the simple root j with the coroot
/// of i, so the simple root j has weight coordinates given by column j.
/// Indices are 0-based in the API; names and printed labels are 1-based.
class RootDatum {
 public:
  enum class Family { TypeA, TypeC2, Custom };

  /// Validates the Cartan axioms and the symmetrizer, then computes the
  /// positive roots. Throws `Error` for non-finite type.
  RootDatum(std::string name, std::vector<std::vector<int>> cartan,
            std::vector<std::int64_t> symmetrizer, Family family = Family::Custom,
            int root_cap = 0);

  static RootDatum type_a(int rank);
  static RootDatum type_c2();
  /// "A1".."A9" or "C2".
  static RootDatum builtin(std::string_view name);
  /// `{ "rank": r, "cartan": [[...]], "symmetrizer": [...] }`; symmetrizer
  /// entries may be integers or "p/q" strings.
  static RootDatum from_json(const nlohmann::json& j);

  const std::string& name() const { return name_; }
  Family family() const { return family_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const;
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::int64_t>& symmetrizer() const { return symmetrizer_; }

  Weight fundamental(int i) const;
  Weight rho() const;
  Weight zero() const { return Weight::zero(rank_); }
  Weight to_weight(const RootVector& root) const;

  /// (lambda, alpha_i^vee).
  int pairing(const Weight& lambda, int i) const;
  /// (gamma, alpha_i^vee) for a vector in the root lattice.
  int pairing(const RootVector& gamma, int i) const;

  Weight reflect(int i, const Weight& lambda) const;
  RootVector reflect(int i, const RootVector& gamma) const;
  /// Reflection t_gamma for a root gamma (positive or negative).
  Weight reflect_by_root(const RootVector& gamma, const Weight& lambda) const;
  RootVector reflect_by_root(const RootVector& gamma, const RootVector& v) const;

  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  bool is_root(const RootVector& gamma) const;

  bool is_dominant(const Weight& lambda) const;
  /// lambda - mu is dominant.
  bool dominant_diff(const Weight& lambda, const Weight& mu) const;

  /// Index of the simple root a positive root is conjugate to, together with
  /// a word w (outermost letter first) such that gamma = w(alpha_i).
  struct RootWitness {
    int simple = 0;
    std::vector<int> word;
  };
  const RootWitness& witness(const RootVector& positive_root) const;

  nlohmann::json to_json() const;

 private:
  void check_index(int i) const;
  void compute_positive_roots(int cap);

  std::string name_;
  Family family_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::int64_t> symmetrizer_;
  std::vector<RootVector> positive_roots_;
  std::vector<RootWitness> witnesses_;
};

IndexSet supp_root(const RootVector& gamma);
IndexSet supp_weight(const Weight& lambda);

}  // namespace hrg
