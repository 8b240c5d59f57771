#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapkit/boolean_algebra.hpp"
#include "swapkit/formula.hpp"

namespace swapkit {

using Index = std::uint32_t;
using Cell = std::vector<Index>;  // sorted, duplicate-free, nonempty

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Product carrier cap; SWAPKIT_MAX_CELLS overrides the default of 10^6.
std::size_t product_cap();

// A finite multialgebra. Table-backed algebras store one cell id per argument
// tuple (identical cells are shared); products are evaluated factorwise on
// demand. Argument tuples are coded in mixed radix, first argument most
// significant.
class MultiAlg {
 public:
  MultiAlg();

  const Signature& signature() const;
  std::size_t size() const;
  std::string label(Index x) const;
  std::vector<std::string> labels() const;
  std::optional<Index> find_label(std::string_view label) const;

  std::size_t tuple_count(std::size_t op) const;
  std::size_t encode(std::span<const Index> args) const;
  void decode(std::size_t code, std::span<Index> args) const;

  Cell cell(std::size_t op, std::span<const Index> args) const;
  Cell cell_at(std::size_t op, std::size_t code) const;
  bool cell_contains(std::size_t op, std::span<const Index> args, Index x) const;

  Cell cell(Conn c, Index a) const { return cell(static_cast<std::size_t>(c), std::span<const Index>(&a, 1)); }
  Cell cell(Conn c, Index a, Index b) const {
    Index args[2] = {a, b};
    return cell(static_cast<std::size_t>(c), args);
  }

  bool is_product() const;
  const std::vector<MultiAlg>& factors() const;
  std::vector<Index> components(Index x) const;
  Index from_components(std::span<const Index> parts) const;

  // Table-backed access; throws for products.
  std::uint32_t cell_id(std::size_t op, std::size_t code) const;
  const std::vector<Cell>& cell_pool(std::size_t op) const;

  // Same signature, size and cells (labels ignored).
  bool same_tables(const MultiAlg& other) const;

  friend class MultiAlgBuilder;
  friend MultiAlg make_product(std::vector<MultiAlg> factors);

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

// Builds a table-backed multialgebra cell by cell; every cell must be set.
class MultiAlgBuilder {
 public:
  MultiAlgBuilder(Signature sig, std::vector<std::string> labels);
  std::size_t size() const;
  std::size_t tuple_count(std::size_t op) const;
  void set(std::size_t op, std::size_t code, Cell cell);
  void set(std::size_t op, std::span<const Index> args, Cell cell);
  MultiAlg build();

 private:
  struct State;
  std::shared_ptr<State> st_;
};

// Lazily evaluated product; the empty family gives the terminal one-element
// multialgebra. Throws CapError above product_cap().
MultiAlg make_product(std::vector<MultiAlg> factors);

struct MaMap {
  MultiAlg source;
  MultiAlg target;
  std::vector<Index> map;

  Index operator()(Index x) const { return map.at(x); }
};

MaMap identity_map(const MultiAlg& a);
MaMap compose(const MaMap& g, const MaMap& f);  // g after f
MaMap inverse(const MaMap& f);                  // f must be bijective

bool is_injective(const MaMap& f);
bool is_surjective(const MaMap& f);

bool is_submultialgebra(const MultiAlg& b, const MultiAlg& a, std::span<const Index> embedding);
bool is_homomorphism(const MaMap& f);
bool is_full_homomorphism(const MaMap& f);
bool is_isomorphism(const MaMap& f);
bool is_epimorphism(const MaMap& f);
bool is_monomorphism(const MaMap& f);

// First argument tuple where f fails to be a homomorphism, if any.
struct HomWitness {
  std::size_t op;
  std::vector<Index> args;
  Index value;
};
std::optional<HomWitness> hom_violation(const MaMap& f);

struct ProductResult {
  MultiAlg product;
  std::vector<MaMap> projections;
};
ProductResult ma_product(const std::vector<MultiAlg>& factors);

// The map c -> (g_i(c))_i into a product built by ma_product.
MaMap pair_maps(const std::vector<MaMap>& gs, const MultiAlg& product);

struct DirectImage {
  MultiAlg image;
  MaMap inclusion;  // image -> f.target
};
DirectImage direct_image(const MaMap& f);

struct Factorization {
  MaMap epi;   // f.source -> image
  MaMap mono;  // image -> f.target
};
Factorization epi_mono_factorize(const MaMap& f);

// An equivalence relation given by a block index per element; blocks are
// numbered by first occurrence.
class EquivRel {
 public:
  EquivRel() = default;
  explicit EquivRel(std::vector<Index> block_of);
  static EquivRel identity(std::size_t n);
  static EquivRel from_blocks(std::size_t n, const std::vector<std::vector<Index>>& blocks);

  std::size_t size() const { return block_.size(); }
  std::size_t blocks() const { return count_; }
  Index block(Index x) const { return block_.at(x); }
  std::vector<std::vector<Index>> members() const;

 private:
  std::vector<Index> block_;
  std::size_t count_ = 0;
};

bool is_multicongruence(const EquivRel& theta, const MultiAlg& a);

struct Quotient {
  MultiAlg algebra;
  MaMap projection;
};
Quotient quotient(const MultiAlg& a, const EquivRel& theta, std::vector<std::string> block_labels = {});

// Restriction of `a` to `elements`, keeping only cell members inside it;
// throws if some restricted cell is empty.
MultiAlg restrict_to(const MultiAlg& a, std::span<const Index> elements);

}  // namespace swapkit
