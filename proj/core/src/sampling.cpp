#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "swapkit/swap.hpp"

namespace swapkit {

namespace {

std::vector<Index> members_of(const std::vector<char>& in) {
  std::vector<Index> out;
  for (Index x = 0; x < in.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// Visits every argument tuple over `elems` for every operation.
template <class F>
void for_each_tuple(const MultiAlg& m, const std::vector<Index>& elems, F&& f) {
  const auto& sig = m.signature();
  std::vector<Index> args;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t ar = static_cast<std::size_t>(sig.op(op).arity);
    args.assign(ar, 0);
    std::vector<std::size_t> pos(ar, 0);
    if (ar > 0 && elems.empty()) continue;
    while (true) {
      for (std::size_t i = 0; i < ar; ++i) args[i] = elems[pos[i]];
      f(op, std::span<const Index>(args));
      std::size_t i = ar;
      while (i > 0 && ++pos[i - 1] == elems.size()) pos[--i] = 0;
      if (i == 0) break;
    }
  }
}

}  // namespace

SwapStructure sub_structure(const SwapStructure& b, std::span<const Index> elements, const MultiAlg& tables) {
  if (!is_submultialgebra(tables, b.algebra(), elements))
    throw std::invalid_argument("sub_structure: tables do not describe a submultialgebra");
  std::vector<Snapshot> snaps;
  for (Index x : elements) snaps.push_back(b.snapshot(x));
  return SwapStructure(tables, b.backing(), b.logic(), b.encoding(), std::move(snaps));
}

SwapStructure restrict(const SwapStructure& b, std::span<const Index> elements) {
  return sub_structure(b, elements, restrict_to(b.algebra(), elements));
}

std::vector<std::vector<Index>> closed_subuniverses(const SwapStructure& b) {
  const MultiAlg& m = b.algebra();
  const std::size_t k = m.size();
  if (k > 16) throw CapError("closed_subuniverses: more than 16 elements");
  const auto& sig = m.signature();
  // Cell masks per operation, indexed by tuple code.
  std::vector<std::vector<std::uint32_t>> masks(sig.size());
  for (std::size_t op = 0; op < sig.size(); ++op) {
    masks[op].resize(m.tuple_count(op));
    for (std::size_t code = 0; code < masks[op].size(); ++code)
      for (Index v : m.cell_at(op, code)) masks[op][code] |= 1u << v;
  }
  std::vector<std::vector<Index>> out;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << k); ++s) {
    std::vector<Index> elems;
    for (Index x = 0; x < k; ++x)
      if (s >> x & 1u) elems.push_back(x);
    bool ok = true;
    for (std::size_t op = 0; op < sig.size() && ok; ++op) {
      const std::size_t ar = static_cast<std::size_t>(sig.op(op).arity);
      if (ar == 1) {
        for (Index x : elems)
          if (!(masks[op][x] & s)) {
            ok = false;
            break;
          }
      } else if (ar == 2) {
        for (Index x : elems) {
          for (Index y : elems)
            if (!(masks[op][x * k + y] & s)) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
      } else {
        for_each_tuple(m, elems, [&](std::size_t o, std::span<const Index> args) {
          if (o == op && !(masks[op][m.encode(args)] & s)) ok = false;
        });
      }
    }
    if (ok) out.push_back(std::move(elems));
  }
  return out;
}

std::vector<std::vector<Index>> strictly_closed_subuniverses(const SwapStructure& b) {
  const MultiAlg& m = b.algebra();
  const std::size_t k = m.size();
  auto close = [&](std::vector<char> in) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Index> elems = members_of(in);
      for_each_tuple(m, elems, [&](std::size_t op, std::span<const Index> args) {
        for (Index v : m.cell(op, args))
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
      });
    }
    return in;
  };
  std::set<std::vector<char>> seen;
  std::deque<std::vector<char>> todo;
  auto visit = [&](std::vector<char> c) {
    if (seen.insert(c).second) todo.push_back(std::move(c));
  };
  for (Index x = 0; x < k; ++x) {
    std::vector<char> s(k, 0);
    s[x] = 1;
    visit(close(std::move(s)));
  }
  while (!todo.empty()) {
    std::vector<char> c = std::move(todo.front());
    todo.pop_front();
    for (Index x = 0; x < k; ++x)
      if (!c[x]) {
        std::vector<char> s = c;
        s[x] = 1;
        visit(close(std::move(s)));
      }
  }
  std::vector<std::vector<Index>> out;
  for (const auto& s : seen) out.push_back(members_of(s));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

SubSample random_submultialgebra(const SwapStructure& b, Rng& rng, const SampleOptions& opts) {
  const MultiAlg& m = b.algebra();
  const std::size_t k = m.size();
  std::bernoulli_distribution keep(opts.keep_probability);
  std::vector<Index> zeros;
  for (Index x = 0; x < k; ++x)
    if (b.snapshot(x).z1 == 0) zeros.push_back(x);

  for (int attempt = 0; attempt < 200; ++attempt) {
    // Sparse seeds close to proper sub-universes more often.
    std::bernoulli_distribution seed(std::uniform_real_distribution<double>(0.05, 0.6)(rng));
    std::vector<char> in(k, 0);
    for (Index x = 0; x < k; ++x) in[x] = seed(rng);
    if (std::none_of(in.begin(), in.end(), [](char c) { return c; })) in[pick(rng, k)] = 1;
    if (opts.keep_zero && !zeros.empty() && std::none_of(zeros.begin(), zeros.end(), [&](Index z) { return in[z]; }))
      in[zeros[pick(rng, zeros.size())]] = 1;

    // Close so that every cell over the set meets it.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Index> elems = members_of(in);
      for_each_tuple(m, elems, [&](std::size_t op, std::span<const Index> args) {
        Cell c = m.cell(op, args);
        if (std::none_of(c.begin(), c.end(), [&](Index v) { return in[v]; })) {
          in[c[pick(rng, c.size())]] = 1;
          grew = true;
        }
      });
    }

    std::vector<Index> elems = members_of(in);
    std::vector<Index> pos(k, 0);
    std::vector<std::string> labels;
    for (Index i = 0; i < elems.size(); ++i) {
      pos[elems[i]] = i;
      labels.push_back(m.label(elems[i]));
    }
    MultiAlgBuilder builder(m.signature(), labels);
    bool shrunk = elems.size() < k;
    std::vector<Index> local;
    for_each_tuple(m, elems, [&](std::size_t op, std::span<const Index> args) {
      Cell full = m.cell(op, args);
      Cell inside;
      for (Index v : full)
        if (in[v]) inside.push_back(v);
      Cell kept;
      for (Index v : inside)
        if (keep(rng)) kept.push_back(pos[v]);
      if (kept.empty()) kept.push_back(pos[inside[pick(rng, inside.size())]]);
      if (kept.size() < full.size()) shrunk = true;
      local.clear();
      for (Index a : args) local.push_back(pos[a]);
      builder.set(op, std::span<const Index>(local), std::move(kept));
    });
    if (opts.proper && !shrunk) continue;
    MultiAlg tables = builder.build();
    return {sub_structure(b, elems, tables), elems};
  }
  throw std::invalid_argument("random_submultialgebra: no proper submultialgebra found");
}

}  // namespace swapkit
