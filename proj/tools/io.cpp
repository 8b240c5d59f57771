#include "io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace swapkit::io {

namespace {

constexpr Conn kConns[] = {Conn::And, Conn::Or, Conn::Imp, Conn::Neg, Conn::Cons};

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

// Rows of cells under a header; the first column holds the argument.
std::string grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  auto line = [&](const std::vector<std::string>& cells) {
    std::string s = pad(cells[0], width[0]) + " |";
    for (std::size_t c = 1; c < cells.size(); ++c) s += " " + pad(cells[c], width[c]);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = line(header);
  std::size_t total = width[0] + 1;
  for (std::size_t c = 1; c < width.size(); ++c) total += width[c] + 1;
  out += std::string(width[0] + 1, '-') + "+" + std::string(total - width[0] - 1, '-') + "\n";
  for (const auto& row : rows) out += line(row);
  return out;
}

template <class CellFn>
std::string render_ops(const MultiAlg& m, CellFn text) {
  const Index k = static_cast<Index>(m.size());
  std::vector<std::string> labels = m.labels();
  std::string out;
  for (Conn c : kConns) {
    const std::string sym(conn_symbol(c));
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {sym};
    if (arity(c) == 2) {
      header.insert(header.end(), labels.begin(), labels.end());
      for (Index x = 0; x < k; ++x) {
        std::vector<std::string> row = {labels[x]};
        for (Index y = 0; y < k; ++y) row.push_back(text(m.cell(c, x, y)));
        rows.push_back(std::move(row));
      }
    } else {
      header.push_back(sym + "x");
      for (Index x = 0; x < k; ++x) rows.push_back({labels[x], text(m.cell(c, x))});
    }
    out += "\n" + grid(header, rows);
  }
  return out;
}

// Every argument tuple of length n over k elements, first argument slowest.
std::vector<std::vector<Index>> tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<Index>> out = {{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Index>> next;
    for (const auto& t : out)
      for (Index x = 0; x < k; ++x) {
        next.push_back(t);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

std::string tuple_key(const std::vector<Index>& args) {
  std::string key;
  for (std::size_t i = 0; i < args.size(); ++i) key += (i ? "," : "") + std::to_string(args[i]);
  return key;
}

std::string join_labels(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

}  // namespace

std::string set_text(const MultiAlg& m, const Cell& c) {
  std::vector<std::string> xs;
  for (Index v : c) xs.push_back(m.label(v));
  return "{" + join_labels(xs, ",") + "}";
}

TableStyle table_style(const SwapStructure& b) {
  if (b.encoding() == Encoding::Triple) return TableStyle::Blocks;
  const MultiAlg& m = b.algebra();
  for (std::size_t op = 0; op < m.signature().size(); ++op)
    for (std::size_t code = 0; code < m.tuple_count(op); ++code)
      if (m.cell_at(op, code).size() != 1) return TableStyle::Sets;
  return TableStyle::Elements;
}

std::string cell_text(const SwapStructure& b, const Cell& c, TableStyle style) {
  if (style == TableStyle::Sets || (style == TableStyle::Elements && c.size() != 1)) return set_text(b.algebra(), c);
  if (c.size() == 1) return b.algebra().label(c[0]);
  std::size_t des = 0;
  for (Index x = 0; x < b.size(); ++x) des += b.designated(x);
  const std::size_t in_d = static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [&](Index v) { return b.designated(v); }));
  if (in_d == c.size() && c.size() == des) return "D";
  if (in_d == 0 && c.size() == b.size() - des) return "ND";
  return set_text(b.algebra(), c);
}

std::string render_tables(const SwapStructure& b) {
  std::ostringstream out;
  const unsigned n = b.backing().atoms();
  out << logic_name(b.logic()) << " over " << n << (n == 1 ? " atom" : " atoms") << "\n";
  std::vector<std::string> d, nd;
  for (Index x = 0; x < b.size(); ++x) (b.designated(x) ? d : nd).push_back(b.algebra().label(x));
  out << "carrier: " << join_labels(b.algebra().labels(), " ") << "\n";
  out << "D = {" << join_labels(d, ", ") << "}\n";
  out << "ND = {" << join_labels(nd, ", ") << "}\n";
  const TableStyle style = table_style(b);
  out << render_ops(b.algebra(), [&](const Cell& c) { return cell_text(b, c, style); });
  return out.str();
}

std::string render_tables(const MultiAlg& m) {
  return "carrier: " + join_labels(m.labels(), " ") + "\n" +
         render_ops(m, [&](const Cell& c) { return set_text(m, c); });
}

json multialgebra_json(const MultiAlg& m) {
  const Signature& sig = m.signature();
  json j;
  json decls = json::array();
  for (const auto& d : sig.ops()) decls.push_back({{"name", d.name}, {"arity", d.arity}});
  j["signature"] = decls;
  j["carrier"] = m.labels();
  json ops = json::object();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const std::size_t n = static_cast<std::size_t>(sig.op(op).arity);
    json table = json::object();
    for (const auto& args : tuples(n, m.size())) table[tuple_key(args)] = m.cell(op, args);
    ops[sig.op(op).name] = {{"arity", n}, {"table", table}};
  }
  j["ops"] = ops;
  return j;
}

MultiAlg multialgebra_from_json(const json& j) {
  std::vector<OpDecl> decls;
  for (const auto& d : j.at("signature")) decls.push_back({d.at("name").get<std::string>(), d.at("arity").get<int>()});
  Signature sig(decls);
  const std::vector<std::string> labels = j.at("carrier").get<std::vector<std::string>>();
  const std::size_t k = labels.size();
  MultiAlgBuilder builder(sig, labels);
  const json& ops = j.at("ops");
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const json& entry = ops.at(sig.op(op).name);
    if (entry.at("arity").get<int>() != sig.op(op).arity)
      throw std::invalid_argument("arity of '" + sig.op(op).name + "' differs from the signature");
    const json& table = entry.at("table");
    for (const auto& args : tuples(static_cast<std::size_t>(sig.op(op).arity), k)) {
      const std::string key = tuple_key(args);
      if (!table.contains(key)) throw std::invalid_argument("table of '" + sig.op(op).name + "' misses " + key);
      Cell c = table.at(key).get<Cell>();
      for (Index v : c)
        if (v >= k) throw std::invalid_argument("element index " + std::to_string(v) + " out of range");
      std::sort(c.begin(), c.end());
      builder.set(op, args, c);
    }
  }
  return builder.build();
}

json tables_json(const SwapStructure& b) {
  const MultiAlg& m = b.algebra();
  const BoolAlg& a = b.backing();
  json j;
  j["logic"] = std::string(logic_name(b.logic()));
  j["atoms"] = a.atoms();
  json des = json::array(), snaps = json::object();
  for (Index x = 0; x < b.size(); ++x) {
    if (b.designated(x)) des.push_back(m.label(x));
    const Snapshot& z = b.snapshot(x);
    json coords = {a.format(z.z1), a.format(z.z2)};
    if (b.encoding() == Encoding::Triple) coords.push_back(a.format(z.z3));
    snaps[m.label(x)] = coords;
  }
  j["designated"] = des;
  j["snapshots"] = snaps;
  const TableStyle style = table_style(b);
  json shown = json::object();
  const Index k = static_cast<Index>(m.size());
  for (Conn c : kConns) {
    json table = json::array();
    for (Index x = 0; x < k; ++x) {
      if (arity(c) == 1) {
        table.push_back(cell_text(b, m.cell(c, x), style));
        continue;
      }
      json row = json::array();
      for (Index y = 0; y < k; ++y) row.push_back(cell_text(b, m.cell(c, x, y), style));
      table.push_back(row);
    }
    shown[std::string(conn_symbol(c))] = table;
  }
  j["tables"] = shown;
  const json structure = multialgebra_json(m);
  for (const auto& [key, value] : structure.items()) j[key] = value;
  return j;
}

json verdict_json(const Verdict& v, const MultiAlg& m) {
  json j;
  j["holds"] = v.holds;
  if (v.countermodel) {
    json cm = json::object();
    for (std::size_t i = 0; i < v.countermodel->formulas.size(); ++i)
      cm[v.countermodel->formulas[i].to_string()] = m.label(v.countermodel->values[i]);
    j["countermodel"] = cm;
  }
  return j;
}

Verdict verdict_from_json(const json& j, const MultiAlg& m) {
  Verdict v;
  v.holds = j.at("holds").get<bool>();
  if (j.contains("countermodel")) {
    PartialValuation pv;
    for (const auto& [f, label] : j.at("countermodel").items()) {
      auto x = m.find_label(label.get<std::string>());
      if (!x) throw std::invalid_argument("unknown element '" + label.get<std::string>() + "'");
      pv.formulas.push_back(parse(f));
      pv.values.push_back(*x);
    }
    v.countermodel = std::move(pv);
  }
  return v;
}

json proof_check_json(const ProofCheck& c) {
  json j;
  j["valid"] = c.valid;
  if (c.valid) {
    json premises = json::array();
    for (const auto& p : c.premises) premises.push_back(p.to_string());
    j["premises"] = premises;
    j["conclusion"] = c.conclusion().to_string();
    j["steps"] = c.lines.size();
  } else {
    j["failed_step"] = c.failed_step;
    j["message"] = c.message;
  }
  return j;
}

std::string render_proof_check(const ProofCheck& c) {
  if (!c.valid) return "invalid at step " + std::to_string(c.failed_step) + ": " + c.message + "\n";
  std::vector<std::string> premises;
  for (const auto& p : c.premises) premises.push_back(p.to_string());
  return "valid: " + std::to_string(c.lines.size()) + " steps\n" + join_labels(premises, ", ") +
         (premises.empty() ? "" : " ") + "|- " + c.conclusion().to_string() + "\n";
}

json report_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.name;
  j["ok"] = r.ok();
  j["checks"] = r.checks;
  j["failed"] = r.failed;
  j["failures"] = r.failures;
  return j;
}

std::string render_report(const SuiteReport& r) {
  std::string s = r.name + ": " + (r.ok() ? "ok" : "FAILED") + " (" + std::to_string(r.checks) + " checks, " +
                  std::to_string(r.failed) + " failed)\n";
  for (const auto& f : r.failures) s += "  " + f + "\n";
  return s;
}

}  // namespace swapkit::io
