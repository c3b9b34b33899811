#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace quinn {

using Rational = mpq_class;

enum class ErrorKind { Schema, Axiom, Boundary, Precondition };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// Outcome of a structural check. `witness` holds the offending tuple of ids.
struct Report {
  bool ok = true;
  bool malformed = false;
  std::string axiom;
  std::vector<int> witness;
  std::string message;

  static Report pass() { return {}; }
  static Report fail(std::string axiom, std::vector<int> witness, std::string message = {}) {
    Report r;
    r.ok = false;
    r.axiom = std::move(axiom);
    r.witness = std::move(witness);
    r.message = std::move(message);
    return r;
  }
  static Report bad_table(std::string message) {
    Report r;
    r.ok = false;
    r.malformed = true;
    r.axiom = "malformed";
    r.message = std::move(message);
    return r;
  }
  explicit operator bool() const { return ok; }
  std::string describe() const;
};

// Throws Error(Schema) for malformed reports and Error(kind) otherwise.
void require(const Report& r, ErrorKind kind = ErrorKind::Axiom);

// Union-find whose class representative is always the smallest member.
class UnionFind {
public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  std::size_t size() const { return parent_.size(); }

private:
  std::vector<int> parent_;
};

std::string to_string(const Rational& q);

// Exact q^e for rational e, when the result is rational.
bool exact_rational_power(const Rational& base, const Rational& e, Rational& out);

// Mixed-radix counter helpers used by exhaustive enumerations.
inline bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace quinn
