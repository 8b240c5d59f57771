#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace swapkit {

// An element of a finite Boolean algebra: the set of atoms below it, as a mask.
using Elem = std::uint32_t;

class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The powerset algebra on n atoms. n = 0 is the one-element algebra (0 = 1).
class BoolAlg {
 public:
  static constexpr unsigned max_atoms = 16;

  BoolAlg() = default;
  explicit BoolAlg(unsigned atoms);

  unsigned atoms() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  Elem top() const { return n_ == 0 ? 0 : static_cast<Elem>((std::uint64_t{1} << n_) - 1); }
  Elem bottom() const { return 0; }
  bool degenerate() const { return n_ == 0; }

  Elem meet(Elem a, Elem b) const { return a & b; }
  Elem join(Elem a, Elem b) const { return a | b; }
  Elem compl_(Elem a) const { return ~a & top(); }
  Elem imp(Elem a, Elem b) const { return compl_(a) | b; }
  bool leq(Elem a, Elem b) const { return (a & ~b) == 0; }
  bool contains(Elem a) const { return (a & ~top()) == 0; }

  // Atom i is printed at position i, e.g. "10" is atom 0 on 2 atoms.
  std::string format(Elem a) const;

  bool operator==(const BoolAlg&) const = default;

 private:
  unsigned n_ = 0;
};

BoolAlg powerset_algebra(unsigned atoms);

// A total map between Boolean algebras; `is_hom` checks it preserves the
// Boolean signature.
struct BaHom {
  BoolAlg source;
  BoolAlg target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map.at(a); }
  bool is_hom() const;
  bool injective() const;
  bool surjective() const;
};

BaHom identity_hom(const BoolAlg& a);
BaHom compose(const BaHom& g, const BaHom& f);  // g after f

// Homomorphisms between finite powerset algebras correspond to maps between
// atom sets in the opposite direction: h(x) = {j : dual[j] in x}.
BaHom hom_from_dual(const BoolAlg& source, const BoolAlg& target, std::span<const unsigned> dual);

struct BaProduct {
  BoolAlg algebra;
  std::vector<BaHom> projections;
  std::vector<unsigned> offsets;  // first atom of each factor

  Elem tuple(std::span<const Elem> parts) const;
};

// Factor i occupies atoms [offsets[i], offsets[i] + atoms_i).
BaProduct ba_product(std::span<const BoolAlg> factors);

// One homomorphism into the two-element algebra per atom: h_a(x) = 1 iff a <= x.
std::vector<BaHom> atom_embedding(const BoolAlg& a);

// Pairs the homomorphisms into their product; the result lands in the product
// of the targets built by ba_product.
BaHom tuple_homs(std::span<const BaHom> homs);

// Checks the Boolean-algebra equations on an abstract finite algebra; returns
// a description of the first failure.
struct FiniteBooleanOps {
  std::size_t size = 0;
  std::function<std::size_t(std::size_t, std::size_t)> meet, join, imp;
  std::function<std::size_t(std::size_t)> compl_;
  std::size_t zero = 0, one = 0;
};
std::optional<std::string> boolean_law_violation(const FiniteBooleanOps& ops);

// A finite classical implicative lattice.
class CilError : public std::runtime_error {
 public:
  enum class Kind { NotLattice, NoImplication, NotClassical };
  CilError(Kind kind, std::size_t a, std::size_t b, const std::string& what)
      : std::runtime_error(what), kind_(kind), a_(a), b_(b) {}
  Kind kind() const { return kind_; }
  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }

 private:
  Kind kind_;
  std::size_t a_, b_;
};

using Table = std::vector<std::vector<std::size_t>>;

class Cil {
 public:
  std::size_t size() const { return meet_.size(); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t imp(std::size_t a, std::size_t b) const { return imp_[a][b]; }
  bool leq(std::size_t a, std::size_t b) const { return meet_[a][b] == a; }
  std::size_t top() const { return top_; }
  std::size_t bottom() const { return bottom_; }

 private:
  friend Cil make_cil(const Table&, const Table&);
  Table meet_, join_, imp_;
  std::size_t top_ = 0, bottom_ = 0;
};

// Validates the lattice laws, computes a -> b = max{c : a & c <= b}, checks it
// is a relative pseudocomplement and that a | (a -> b) = 1.
Cil make_cil(const Table& meet, const Table& join);
Cil cil_of(const BoolAlg& a);

// The Boolean algebra on L x {0,1} built from a classical implicative lattice.
// Element (a, s) has index 2a + s; (a, 1) is the copy of a, (a, 0) its formal
// complement.
class DupAlg {
 public:
  explicit DupAlg(Cil base);

  const Cil& base() const { return base_; }
  std::size_t size() const { return 2 * base_.size(); }
  static std::size_t index(std::size_t a, int s) { return 2 * a + static_cast<std::size_t>(s); }
  static std::size_t first(std::size_t x) { return x / 2; }
  static int second(std::size_t x) { return static_cast<int>(x % 2); }

  std::size_t meet(std::size_t x, std::size_t y) const;
  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t imp(std::size_t x, std::size_t y) const;
  std::size_t compl_(std::size_t x) const { return imp(x, zero()); }
  std::size_t zero() const { return index(base_.top(), 0); }
  std::size_t one() const { return index(base_.top(), 1); }
  std::size_t embed(std::size_t a) const { return index(a, 1); }

  FiniteBooleanOps ops() const;

 private:
  Cil base_;
};

DupAlg duplicate(const Cil& l);

// h maps each element of l to the target algebra and must preserve &, | and ->.
// Returns the unique Boolean homomorphism h* on the duplicate with h = h* . i*.
std::vector<Elem> universal_extension(const DupAlg& dup, const BoolAlg& target, std::span<const Elem> h);

}  // namespace swapkit
