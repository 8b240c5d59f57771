#include "swapkit/multialgebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace swapkit {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::size_t h = c.size();
    for (Index x : c) h = h * 1000003U ^ x;
    return h;
  }
};

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::size_t{1} << 40) / base) throw CapError("table too large to materialize");
    r *= base;
  }
  return r;
}

void normalize(Cell& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

void require_same_signature(const MultiAlg& a, const MultiAlg& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch("multialgebras have different signatures");
}

}  // namespace

std::size_t product_cap() {
  if (const char* env = std::getenv("SWAPKIT_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

struct MultiAlg::Rep {
  Signature sig;
  std::size_t n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> ids;
  std::vector<std::vector<Cell>> pools;
  bool product = false;
  std::vector<MultiAlg> factors;
  std::vector<std::size_t> strides;
};

MultiAlg::MultiAlg() : rep_(std::make_shared<Rep>()) {}

const Signature& MultiAlg::signature() const { return rep_->sig; }
std::size_t MultiAlg::size() const { return rep_->n; }

std::string MultiAlg::label(Index x) const {
  if (x >= rep_->n) throw std::out_of_range("MultiAlg::label: index out of range");
  if (!rep_->product) return rep_->labels[x];
  if (rep_->factors.empty()) return "*";
  std::string s = "(";
  auto parts = components(x);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += rep_->factors[i].label(parts[i]);
  }
  return s + ")";
}

std::vector<std::string> MultiAlg::labels() const {
  if (!rep_->product) return rep_->labels;
  std::vector<std::string> out;
  out.reserve(rep_->n);
  for (Index x = 0; x < rep_->n; ++x) out.push_back(label(x));
  return out;
}

std::optional<Index> MultiAlg::find_label(std::string_view l) const {
  for (Index x = 0; x < rep_->n; ++x)
    if (label(x) == l) return x;
  return std::nullopt;
}

std::size_t MultiAlg::tuple_count(std::size_t op) const { return power(rep_->n, rep_->sig.op(op).arity); }

std::size_t MultiAlg::encode(std::span<const Index> args) const {
  std::size_t code = 0;
  for (Index a : args) code = code * rep_->n + a;
  return code;
}

void MultiAlg::decode(std::size_t code, std::span<Index> args) const {
  for (std::size_t i = args.size(); i-- > 0;) {
    args[i] = static_cast<Index>(code % rep_->n);
    code /= rep_->n;
  }
}

Cell MultiAlg::cell(std::size_t op, std::span<const Index> args) const {
  if (op >= rep_->sig.size() || static_cast<int>(args.size()) != rep_->sig.op(op).arity)
    throw std::invalid_argument("MultiAlg::cell: bad operation or arity");
  for (Index a : args)
    if (a >= rep_->n) throw std::out_of_range("MultiAlg::cell: argument out of range");
  if (!rep_->product) return rep_->pools[op][rep_->ids[op][encode(args)]];

  Cell acc{0};
  std::vector<Index> fargs(args.size());
  for (std::size_t i = 0; i < rep_->factors.size(); ++i) {
    const MultiAlg& f = rep_->factors[i];
    for (std::size_t k = 0; k < args.size(); ++k)
      fargs[k] = static_cast<Index>(args[k] / rep_->strides[i] % f.size());
    Cell fc = f.cell(op, fargs);
    Cell next;
    next.reserve(acc.size() * fc.size());
    for (Index base : acc)
      for (Index y : fc) next.push_back(base + static_cast<Index>(y * rep_->strides[i]));
    acc = std::move(next);
  }
  return acc;
}

Cell MultiAlg::cell_at(std::size_t op, std::size_t code) const {
  if (!rep_->product) return rep_->pools[op][rep_->ids[op].at(code)];
  std::vector<Index> args(static_cast<std::size_t>(rep_->sig.op(op).arity));
  decode(code, args);
  return cell(op, args);
}

bool MultiAlg::cell_contains(std::size_t op, std::span<const Index> args, Index x) const {
  if (!rep_->product) {
    const Cell& c = rep_->pools[op][rep_->ids[op][encode(args)]];
    return std::binary_search(c.begin(), c.end(), x);
  }
  std::vector<Index> fargs(args.size());
  for (std::size_t i = 0; i < rep_->factors.size(); ++i) {
    const MultiAlg& f = rep_->factors[i];
    for (std::size_t k = 0; k < args.size(); ++k)
      fargs[k] = static_cast<Index>(args[k] / rep_->strides[i] % f.size());
    if (!f.cell_contains(op, fargs, static_cast<Index>(x / rep_->strides[i] % f.size()))) return false;
  }
  return true;
}

bool MultiAlg::is_product() const { return rep_->product; }
const std::vector<MultiAlg>& MultiAlg::factors() const { return rep_->factors; }

std::vector<Index> MultiAlg::components(Index x) const {
  if (!rep_->product) throw std::logic_error("MultiAlg::components: not a product");
  std::vector<Index> out(rep_->factors.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<Index>(x / rep_->strides[i] % rep_->factors[i].size());
  return out;
}

Index MultiAlg::from_components(std::span<const Index> parts) const {
  if (!rep_->product || parts.size() != rep_->factors.size())
    throw std::logic_error("MultiAlg::from_components: not a product of that arity");
  std::size_t x = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) x += parts[i] * rep_->strides[i];
  return static_cast<Index>(x);
}

std::uint32_t MultiAlg::cell_id(std::size_t op, std::size_t code) const {
  if (rep_->product) throw std::logic_error("MultiAlg::cell_id: product algebras have no stored tables");
  return rep_->ids[op][code];
}

const std::vector<Cell>& MultiAlg::cell_pool(std::size_t op) const {
  if (rep_->product) throw std::logic_error("MultiAlg::cell_pool: product algebras have no stored tables");
  return rep_->pools[op];
}

bool MultiAlg::same_tables(const MultiAlg& other) const {
  if (!(signature() == other.signature()) || size() != other.size()) return false;
  for (std::size_t op = 0; op < signature().size(); ++op)
    for (std::size_t code = 0; code < tuple_count(op); ++code)
      if (cell_at(op, code) != other.cell_at(op, code)) return false;
  return true;
}

struct MultiAlgBuilder::State {
  MultiAlg::Rep rep;
  std::vector<std::unordered_map<Cell, std::uint32_t, CellHash>> index;
};

MultiAlgBuilder::MultiAlgBuilder(Signature sig, std::vector<std::string> labels)
    : st_(std::make_shared<State>()) {
  auto& r = st_->rep;
  r.sig = std::move(sig);
  r.n = labels.size();
  r.labels = std::move(labels);
  if (r.n > std::numeric_limits<Index>::max() / 2) throw CapError("carrier too large");
  r.ids.resize(r.sig.size());
  r.pools.resize(r.sig.size());
  st_->index.resize(r.sig.size());
  for (std::size_t op = 0; op < r.sig.size(); ++op) r.ids[op].assign(power(r.n, r.sig.op(op).arity), kUnset);
}

std::size_t MultiAlgBuilder::size() const { return st_->rep.n; }
std::size_t MultiAlgBuilder::tuple_count(std::size_t op) const { return st_->rep.ids.at(op).size(); }

void MultiAlgBuilder::set(std::size_t op, std::size_t code, Cell cell) {
  auto& r = st_->rep;
  normalize(cell);
  if (cell.empty()) throw std::invalid_argument("multialgebra cells must be nonempty");
  if (cell.back() >= r.n) throw std::out_of_range("cell member outside the carrier");
  auto [it, inserted] = st_->index[op].emplace(cell, static_cast<std::uint32_t>(r.pools[op].size()));
  if (inserted) r.pools[op].push_back(std::move(cell));
  r.ids[op].at(code) = it->second;
}

void MultiAlgBuilder::set(std::size_t op, std::span<const Index> args, Cell cell) {
  std::size_t code = 0;
  for (Index a : args) code = code * st_->rep.n + a;
  set(op, code, std::move(cell));
}

MultiAlg MultiAlgBuilder::build() {
  for (std::size_t op = 0; op < st_->rep.ids.size(); ++op)
    for (std::uint32_t id : st_->rep.ids[op])
      if (id == kUnset)
        throw std::invalid_argument("multialgebra table for '" + st_->rep.sig.op(op).name + "' is not total");
  MultiAlg m;
  m.rep_ = std::make_shared<const MultiAlg::Rep>(std::move(st_->rep));
  st_.reset();
  return m;
}

MultiAlg make_product(std::vector<MultiAlg> factors) {
  MultiAlg::Rep r;
  r.sig = factors.empty() ? Signature::logic() : factors.front().signature();
  for (const auto& f : factors) require_same_signature(factors.front(), f);
  std::size_t n = 1;
  const std::size_t cap = product_cap();
  for (const auto& f : factors) {
    if (f.size() != 0 && n > cap / f.size())
      throw CapError("product carrier exceeds the cap of " + std::to_string(cap) + " elements");
    n *= f.size();
  }
  if (n > cap) throw CapError("product carrier exceeds the cap of " + std::to_string(cap) + " elements");
  r.n = n;
  r.product = true;
  r.strides.assign(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;) r.strides[i - 1] = r.strides[i] * factors[i].size();
  r.factors = std::move(factors);
  MultiAlg m;
  m.rep_ = std::make_shared<const MultiAlg::Rep>(std::move(r));
  return m;
}

MaMap identity_map(const MultiAlg& a) {
  MaMap f{a, a, std::vector<Index>(a.size())};
  std::iota(f.map.begin(), f.map.end(), Index{0});
  return f;
}

MaMap compose(const MaMap& g, const MaMap& f) {
  if (f.target.size() != g.source.size()) throw std::invalid_argument("compose: maps are not composable");
  MaMap h{f.source, g.target, std::vector<Index>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map.at(f.map[i]);
  return h;
}

bool is_injective(const MaMap& f) {
  std::vector<bool> hit(f.target.size(), false);
  for (Index y : f.map) {
    if (hit.at(y)) return false;
    hit[y] = true;
  }
  return true;
}

bool is_surjective(const MaMap& f) {
  std::vector<bool> hit(f.target.size(), false);
  for (Index y : f.map) hit.at(y) = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

MaMap inverse(const MaMap& f) {
  if (f.map.size() != f.target.size() || !is_injective(f)) throw std::invalid_argument("inverse: map is not bijective");
  MaMap g{f.target, f.source, std::vector<Index>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) g.map[f.map[i]] = static_cast<Index>(i);
  return g;
}

bool is_submultialgebra(const MultiAlg& b, const MultiAlg& a, std::span<const Index> emb) {
  require_same_signature(a, b);
  if (emb.size() != b.size()) throw std::invalid_argument("is_submultialgebra: embedding has the wrong size");
  {
    std::vector<bool> hit(a.size(), false);
    for (Index y : emb) {
      if (y >= a.size() || hit[y]) throw std::invalid_argument("is_submultialgebra: embedding is not injective");
      hit[y] = true;
    }
  }
  std::vector<Index> args, mapped;
  for (std::size_t op = 0; op < b.signature().size(); ++op) {
    args.assign(static_cast<std::size_t>(b.signature().op(op).arity), 0);
    mapped.resize(args.size());
    for (std::size_t code = 0; code < b.tuple_count(op); ++code) {
      b.decode(code, args);
      for (std::size_t k = 0; k < args.size(); ++k) mapped[k] = emb[args[k]];
      for (Index x : b.cell_at(op, code))
        if (!a.cell_contains(op, mapped, emb[x])) return false;
    }
  }
  return true;
}

std::optional<HomWitness> hom_violation(const MaMap& f) {
  require_same_signature(f.source, f.target);
  if (f.map.size() != f.source.size()) throw std::invalid_argument("map has the wrong size");
  std::vector<Index> args, mapped;
  for (std::size_t op = 0; op < f.source.signature().size(); ++op) {
    args.assign(static_cast<std::size_t>(f.source.signature().op(op).arity), 0);
    mapped.resize(args.size());
    for (std::size_t code = 0; code < f.source.tuple_count(op); ++code) {
      f.source.decode(code, args);
      for (std::size_t k = 0; k < args.size(); ++k) mapped[k] = f.map[args[k]];
      for (Index x : f.source.cell_at(op, code))
        if (!f.target.cell_contains(op, mapped, f.map[x])) return HomWitness{op, args, x};
    }
  }
  return std::nullopt;
}

bool is_homomorphism(const MaMap& f) { return !hom_violation(f); }

bool is_full_homomorphism(const MaMap& f) {
  require_same_signature(f.source, f.target);
  if (f.map.size() != f.source.size()) throw std::invalid_argument("map has the wrong size");
  std::vector<Index> args, mapped;
  for (std::size_t op = 0; op < f.source.signature().size(); ++op) {
    args.assign(static_cast<std::size_t>(f.source.signature().op(op).arity), 0);
    mapped.resize(args.size());
    for (std::size_t code = 0; code < f.source.tuple_count(op); ++code) {
      f.source.decode(code, args);
      for (std::size_t k = 0; k < args.size(); ++k) mapped[k] = f.map[args[k]];
      Cell img;
      for (Index x : f.source.cell_at(op, code)) img.push_back(f.map[x]);
      normalize(img);
      if (img != f.target.cell(op, mapped)) return false;
    }
  }
  return true;
}

bool is_isomorphism(const MaMap& f) {
  return f.source.size() == f.target.size() && is_injective(f) && is_full_homomorphism(f);
}

bool is_epimorphism(const MaMap& f) { return is_surjective(f) && is_homomorphism(f); }
bool is_monomorphism(const MaMap& f) { return is_injective(f) && is_homomorphism(f); }

ProductResult ma_product(const std::vector<MultiAlg>& factors) {
  ProductResult r{make_product(factors), {}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    MaMap p{r.product, factors[i], std::vector<Index>(r.product.size())};
    for (Index x = 0; x < r.product.size(); ++x) p.map[x] = r.product.components(x)[i];
    r.projections.push_back(std::move(p));
  }
  return r;
}

MaMap pair_maps(const std::vector<MaMap>& gs, const MultiAlg& product) {
  if (!product.is_product() || gs.size() != product.factors().size())
    throw std::invalid_argument("pair_maps: target is not a product of matching arity");
  if (gs.empty()) throw std::invalid_argument("pair_maps: empty family has no common source");
  MaMap h{gs[0].source, product, std::vector<Index>(gs[0].source.size())};
  std::vector<Index> parts(gs.size());
  for (Index c = 0; c < h.source.size(); ++c) {
    for (std::size_t i = 0; i < gs.size(); ++i) parts[i] = gs[i].map.at(c);
    h.map[c] = product.from_components(parts);
  }
  return h;
}

DirectImage direct_image(const MaMap& f) {
  if (!is_homomorphism(f)) throw std::invalid_argument("direct_image: map is not a homomorphism");
  std::vector<Index> elems(f.map.begin(), f.map.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<Index> pos(f.target.size(), kUnset);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    pos[elems[i]] = static_cast<Index>(i);
    labels.push_back(f.target.label(elems[i]));
  }
  const Signature& sig = f.source.signature();
  MultiAlgBuilder b(sig, labels);
  std::vector<Index> args, img;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    std::vector<Cell> acc(b.tuple_count(op));
    args.assign(static_cast<std::size_t>(sig.op(op).arity), 0);
    img.resize(args.size());
    for (std::size_t code = 0; code < f.source.tuple_count(op); ++code) {
      f.source.decode(code, args);
      std::size_t icode = 0;
      for (Index a : args) icode = icode * elems.size() + pos[f.map[a]];
      for (Index x : f.source.cell_at(op, code)) acc[icode].push_back(pos[f.map[x]]);
    }
    for (std::size_t code = 0; code < acc.size(); ++code) b.set(op, code, std::move(acc[code]));
  }
  DirectImage d{b.build(), {}};
  d.inclusion = MaMap{d.image, f.target, elems};
  if (!is_submultialgebra(d.image, f.target, elems))
    throw std::logic_error("direct_image: result is not a submultialgebra of the target");
  return d;
}

Factorization epi_mono_factorize(const MaMap& f) {
  DirectImage d = direct_image(f);
  std::vector<Index> pos(f.target.size(), kUnset);
  for (std::size_t i = 0; i < d.inclusion.map.size(); ++i) pos[d.inclusion.map[i]] = static_cast<Index>(i);
  MaMap epi{f.source, d.image, std::vector<Index>(f.map.size())};
  for (std::size_t i = 0; i < f.map.size(); ++i) epi.map[i] = pos[f.map[i]];
  return Factorization{std::move(epi), std::move(d.inclusion)};
}

EquivRel::EquivRel(std::vector<Index> block_of) {
  std::unordered_map<Index, Index> renumber;
  block_.reserve(block_of.size());
  for (Index b : block_of) {
    auto [it, inserted] = renumber.emplace(b, static_cast<Index>(renumber.size()));
    block_.push_back(it->second);
  }
  count_ = renumber.size();
}

EquivRel EquivRel::identity(std::size_t n) {
  std::vector<Index> b(n);
  std::iota(b.begin(), b.end(), Index{0});
  return EquivRel(std::move(b));
}

EquivRel EquivRel::from_blocks(std::size_t n, const std::vector<std::vector<Index>>& blocks) {
  std::vector<Index> b(n, kUnset);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw std::invalid_argument("partition has an empty block");
    for (Index x : blocks[i]) {
      if (x >= n) throw std::invalid_argument("partition block mentions an element outside the carrier");
      if (b[x] != kUnset) throw std::invalid_argument("partition blocks overlap");
      b[x] = static_cast<Index>(i);
    }
  }
  for (Index v : b)
    if (v == kUnset) throw std::invalid_argument("partition does not cover the carrier");
  return EquivRel(std::move(b));
}

std::vector<std::vector<Index>> EquivRel::members() const {
  std::vector<std::vector<Index>> out(count_);
  for (Index x = 0; x < block_.size(); ++x) out[block_[x]].push_back(x);
  return out;
}

namespace {

// Blocks met by the cell of every argument tuple, grouped by the tuple of
// blocks; nullopt when two representatives of the same block tuple disagree.
std::optional<std::vector<std::vector<Cell>>> block_cells(const MultiAlg& a, const EquivRel& theta, bool strict) {
  if (theta.size() != a.size()) throw std::invalid_argument("equivalence relation does not partition the carrier");
  const std::size_t m = theta.blocks();
  const Signature& sig = a.signature();
  std::vector<std::vector<Cell>> out(sig.size());
  std::vector<Index> args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const int ar = sig.op(op).arity;
    out[op].assign(power(m, ar), Cell{});
    std::vector<bool> seen(out[op].size(), false);
    args.assign(static_cast<std::size_t>(ar), 0);
    for (std::size_t code = 0; code < a.tuple_count(op); ++code) {
      a.decode(code, args);
      std::size_t bcode = 0;
      for (Index x : args) bcode = bcode * m + theta.block(x);
      Cell blocks;
      for (Index x : a.cell_at(op, code)) blocks.push_back(theta.block(x));
      normalize(blocks);
      if (!seen[bcode]) {
        seen[bcode] = true;
        out[op][bcode] = std::move(blocks);
      } else if (out[op][bcode] != blocks) {
        if (strict) return std::nullopt;
        Cell merged;
        std::set_union(out[op][bcode].begin(), out[op][bcode].end(), blocks.begin(), blocks.end(),
                       std::back_inserter(merged));
        out[op][bcode] = std::move(merged);
      }
    }
  }
  return out;
}

}  // namespace

bool is_multicongruence(const EquivRel& theta, const MultiAlg& a) {
  return block_cells(a, theta, true).has_value();
}

Quotient quotient(const MultiAlg& a, const EquivRel& theta, std::vector<std::string> block_labels) {
  if (!is_multicongruence(theta, a)) throw std::invalid_argument("quotient: relation is not a multicongruence");
  auto cells = block_cells(a, theta, false);
  auto members = theta.members();
  if (block_labels.empty()) {
    for (const auto& blk : members) {
      std::string s = "{";
      for (std::size_t i = 0; i < blk.size(); ++i) s += (i ? "," : "") + a.label(blk[i]);
      block_labels.push_back(s + "}");
    }
  }
  if (block_labels.size() != members.size()) throw std::invalid_argument("quotient: one label per block");
  MultiAlgBuilder b(a.signature(), std::move(block_labels));
  for (std::size_t op = 0; op < cells->size(); ++op)
    for (std::size_t code = 0; code < (*cells)[op].size(); ++code) b.set(op, code, std::move((*cells)[op][code]));
  Quotient q{b.build(), {}};
  q.projection = MaMap{a, q.algebra, std::vector<Index>(a.size())};
  for (Index x = 0; x < a.size(); ++x) q.projection.map[x] = theta.block(x);
  return q;
}

MultiAlg restrict_to(const MultiAlg& a, std::span<const Index> elements) {
  std::vector<Index> pos(a.size(), kUnset);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (pos.at(elements[i]) != kUnset) throw std::invalid_argument("restrict_to: repeated element");
    pos[elements[i]] = static_cast<Index>(i);
    labels.push_back(a.label(elements[i]));
  }
  MultiAlgBuilder b(a.signature(), labels);
  std::vector<Index> args, outer;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    args.assign(static_cast<std::size_t>(a.signature().op(op).arity), 0);
    outer.resize(args.size());
    for (std::size_t code = 0; code < b.tuple_count(op); ++code) {
      std::size_t c = code;
      for (std::size_t k = args.size(); k-- > 0;) {
        args[k] = static_cast<Index>(c % elements.size());
        c /= elements.size();
      }
      for (std::size_t k = 0; k < args.size(); ++k) outer[k] = elements[args[k]];
      Cell kept;
      for (Index x : a.cell(op, outer))
        if (pos[x] != kUnset) kept.push_back(pos[x]);
      if (kept.empty()) throw std::invalid_argument("restrict_to: a cell has no member inside the subset");
      b.set(op, code, std::move(kept));
    }
  }
  return b.build();
}

}  // namespace swapkit
