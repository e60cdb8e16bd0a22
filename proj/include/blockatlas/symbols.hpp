#pragma once

#include <compare>
#include <string>
#include <vector>

namespace blockatlas {

inline constexpr int kDefaultSymbolRankBound = 10;

/// A Lusztig symbol {S, T}, kept in reduced form: the rows never both
/// contain 0. Rows are stored in the order given; `canonical()` picks the
/// representative used for comparison and rendering of unordered symbols.
class Symbol {
 public:
  Symbol() = default;
  Symbol(std::vector<int> s, std::vector<int> t);

  const std::vector<int>& s() const { return s_; }
  const std::vector<int>& t() const { return t_; }

  int rank() const;
  int defect() const;
  bool degenerate() const { return s_ == t_; }

  Symbol swapped() const { return Symbol(t_, s_); }
  /// Longer row first; equal lengths put the lexicographically larger row first.
  Symbol canonical() const;
  bool same_unordered(const Symbol& other) const { return canonical() == other.canonical(); }

  /// "({a,b,...},{c,...})" of the rows as stored.
  std::string to_string() const;
  /// Rendering of the canonical representative.
  std::string key() const { return canonical().to_string(); }

  bool operator==(const Symbol&) const = default;

 private:
  std::vector<int> s_, t_;  // ascending
};

/// Report ordering: rank, then defect, then rows of the canonical form.
bool symbol_less(const Symbol& a, const Symbol& b);

/// Row regrouping by parity: {S_e ∪ T_o, T_e ∪ S_o}.
Symbol phi(const Symbol& sigma);

/// Every symbol reachable by one d-hook (same row) removal.
std::vector<Symbol> remove_hook(const Symbol& sigma, int d);
/// Every symbol reachable by one d-cohook (x in one row, x-d into the other).
std::vector<Symbol> remove_cohook(const Symbol& sigma, int d);

Symbol hook_core(const Symbol& sigma, int d);
Symbol cohook_core(const Symbol& sigma, int d);

/// Defects k with k % modulus == residue.
struct DefectClass {
  int modulus = 1;
  int residue = 0;

  bool contains(int defect) const { return defect % modulus == residue; }

  static DefectClass any() { return {1, 0}; }
  static DefectClass odd() { return {2, 1}; }
  static DefectClass zero_mod_four() { return {4, 0}; }
  static DefectClass two_mod_four() { return {4, 2}; }
};

/// Reduced symbols of rank n with defect in `cls`, each unordered class
/// once, sorted by `symbol_less`, each in canonical form.
std::vector<Symbol> enumerate_symbols(int n, DefectClass cls,
                                      int bound = kDefaultSymbolRankBound);

}  // namespace blockatlas
