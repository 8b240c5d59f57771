#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swapkit/boolean_algebra.hpp"
#include "swapkit/formula.hpp"
#include "swapkit/multialgebra.hpp"
#include "swapkit/random.hpp"

namespace swapkit {

// Ordered by class inclusion along CPLe+ > mbC > mbCciw > mbCci > Ci > CPLe;
// LFI1o and Ciore sit below Ci.
enum class Logic : std::uint8_t { CPLeP, MbC, MbCciw, MbCci, Ci, CPLe, LFI1o, Ciore };

const std::vector<Logic>& all_logics();
std::string_view logic_name(Logic l);
// Case-insensitive, with aliases lfi1 / lfi1o / j3 and cple+ / cplep.
std::optional<Logic> parse_logic(std::string_view name);

enum class Encoding : std::uint8_t { Triple, Pair };
// CPLe+ and mbC use triples; every logic with (ciw) uses pairs.
Encoding encoding_of(Logic l);

// K_a is a subclass of K_b.
bool class_included(Logic a, Logic b);

// Snapshots are always stored as triples. For pair logics the third
// coordinate is the implicit ~(z1 & z2).
struct Snapshot {
  Elem z1 = 0, z2 = 0, z3 = 0;
  auto operator<=>(const Snapshot&) const = default;
};

Snapshot from_pair(const BoolAlg& a, Elem z1, Elem z2);
bool pair_encodable(const BoolAlg& a, const Snapshot& z);
// "T", "t", "t0", "F", "f0" over the two-element algebra, coordinates otherwise.
std::string snapshot_label(const BoolAlg& a, const Snapshot& z, Encoding enc);

bool in_universe(Logic l, const BoolAlg& a, const Snapshot& z);
std::vector<Snapshot> universe(Logic l, const BoolAlg& a);

class SwapStructure {
 public:
  // Throws std::invalid_argument when the snapshots cannot be decoded
  // (wrong count, outside the algebra, repeated, or not pair-encodable in
  // pair mode).
  SwapStructure(MultiAlg algebra, BoolAlg backing, Logic logic, Encoding encoding, std::vector<Snapshot> snapshots);

  const MultiAlg& algebra() const { return alg_; }
  const BoolAlg& backing() const { return backing_; }
  Logic logic() const { return logic_; }
  Encoding encoding() const { return enc_; }
  const std::vector<Snapshot>& snapshots() const { return snaps_; }
  const Snapshot& snapshot(Index x) const { return snaps_.at(x); }
  std::size_t size() const { return snaps_.size(); }

  std::optional<Index> find(const Snapshot& z) const;
  Index at(const Snapshot& z) const;  // throws when absent
  bool designated(Index x) const { return snaps_.at(x).z1 == backing_.top(); }

 private:
  MultiAlg alg_;
  BoolAlg backing_;
  Logic logic_;
  Encoding enc_;
  std::vector<Snapshot> snaps_;
  std::vector<Index> sorted_;  // indices ordered by snapshot
};

// The same multialgebra read under the other encoding.
SwapStructure reencode(const SwapStructure& b, Encoding enc);

SwapStructure full_swap(Logic l, const BoolAlg& a);

// Nullopt when b is a swap structure for l, otherwise the first failed clause.
std::optional<std::string> swap_violation(Logic l, const SwapStructure& b);
bool is_swap_for(Logic l, const SwapStructure& b);

// Searches every snapshot decoding of an undecorated multialgebra. A finite
// swap structure lives over the Boolean subalgebra generated by its first
// coordinates, which has at most as many elements as the carrier, so algebras
// with up to floor(log2 |carrier|) atoms suffice. Throws CapError above 8
// elements.
std::optional<SwapStructure> find_swap_decoding(Logic l, const MultiAlg& m);
bool is_swap_for(Logic l, const MultiAlg& m);

// Metavariables act as fresh propositional variables.
bool validates(const SwapStructure& b, const Formula& schema);
// CPL+ axioms for CPLe+; for the other logics the axioms they add on top of it.
std::vector<Formula> defining_schemas(Logic l);
// b is a swap structure for CPLe+ whose Nmatrix validates defining_schemas(l).
bool characterize(Logic l, const SwapStructure& b);

struct SwapMorphism {
  SwapStructure source;
  SwapStructure target;
  MaMap map;
};

// z -> (f(z1), f(z2), f(z3)) between full swap structures.
SwapMorphism kalman_star(Logic l, const BaHom& f);

struct ProductIso {
  std::vector<SwapStructure> factors;
  BaProduct algebra;
  SwapStructure target;  // full swap structure over the product algebra
  MaMap map;             // product of the factors -> target
};
ProductIso product_iso(Logic l, const std::vector<BoolAlg>& family);

struct Representation {
  std::vector<unsigned> index_set;  // atoms of the backing algebra
  MaMap embedding;                  // b -> product of full_swap(l, A2), one factor per atom
};
Representation represent(Logic l, const SwapStructure& b);

// The submultialgebra of b on `elements` whose cells are given by `tables`
// (indexed by position in `elements`).
SwapStructure sub_structure(const SwapStructure& b, std::span<const Index> elements, const MultiAlg& tables);
// Restriction of b to `elements`, intersecting every cell with it.
SwapStructure restrict(const SwapStructure& b, std::span<const Index> elements);

// Subsets S such that every cell over S meets S. Exhaustive; CapError above
// 16 elements.
std::vector<std::vector<Index>> closed_subuniverses(const SwapStructure& b);
// Subsets S containing every cell over S.
std::vector<std::vector<Index>> strictly_closed_subuniverses(const SwapStructure& b);

struct SampleOptions {
  bool proper = true;       // differ from b in the carrier or in some cell
  bool keep_zero = false;   // keep an element with first coordinate 0
  double keep_probability = 0.5;
};
struct SubSample {
  SwapStructure structure;
  std::vector<Index> embedding;  // into b
};
// A closed sub-universe first, then every cell shrunk at random.
SubSample random_submultialgebra(const SwapStructure& b, Rng& rng, const SampleOptions& opts = {});

// Kalman's construction over a Boolean algebra: pairs (a, b) with a & b = 0.
class KalmanAlg {
 public:
  explicit KalmanAlg(BoolAlg base);

  const BoolAlg& base() const { return base_; }
  std::size_t size() const { return elems_.size(); }
  std::pair<Elem, Elem> element(Index x) const { return elems_.at(x); }
  Index index_of(Elem a, Elem b) const;
  std::string label(Index x) const;

  Index meet(Index x, Index y) const;
  Index join(Index x, Index y) const;
  Index neg(Index x) const;
  Index imp(Index x, Index y) const;         // (a -> c, a & d)
  Index strong_imp(Index x, Index y) const;  // (x -> y) & (~y -> ~x)
  bool leq(Index x, Index y) const;
  Index center() const { return index_of(0, 0); }
  Index bottom() const { return index_of(0, base_.top()); }
  Index top() const { return index_of(base_.top(), 0); }

 private:
  BoolAlg base_;
  std::vector<std::pair<Elem, Elem>> elems_;
  std::vector<Index> lookup_;
};

KalmanAlg kalman_classic(const BoolAlg& a);
std::vector<std::string> kleene_violations(const KalmanAlg& k);

struct DualityMap {
  KalmanAlg source;
  SwapStructure target;  // full_swap(LFI1o, A), read as an ordinary algebra
  std::vector<Index> map;
};
DualityMap duality_star(const BoolAlg& a);
std::vector<std::string> duality_violations(const DualityMap& d);

}  // namespace swapkit
