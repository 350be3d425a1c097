#include "sgpd/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace sgpd {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Directive {
  int line;
  std::string op;
  std::vector<int> args;
  std::string rest;  // for label/src/dst payloads
};

// Splits the stream into directives; ops in `text_ops` keep the text after
// `int_prefix` leading integers as an uninterpreted payload.
std::vector<Directive> read_directives(std::istream& in,
                                       const std::map<std::string, int>& text_ops) {
  std::vector<Directive> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string text = trim(raw);
    if (text.empty()) continue;

    std::istringstream ls(text);
    Directive d;
    d.line = line;
    ls >> d.op;
    auto text_it = text_ops.find(d.op);
    int int_prefix = text_it == text_ops.end() ? -1 : text_it->second;

    std::string tok;
    while (ls >> tok) {
      if (int_prefix >= 0 && static_cast<int>(d.args.size()) == int_prefix) {
        std::string rest;
        std::getline(ls, rest);
        d.rest = trim(tok + rest);
        break;
      }
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        d.args.push_back(v);
      } catch (const std::exception&) {
        fail(line, "expected integer, got \"" + tok + "\"");
      }
    }
    if (int_prefix >= 0 && static_cast<int>(d.args.size()) < int_prefix) {
      fail(line, d.op + " needs " + std::to_string(int_prefix) + " leading integer(s)");
    }
    if (int_prefix >= 0 && d.rest.empty()) fail(line, d.op + " needs a payload");
    out.push_back(std::move(d));
  }
  return out;
}

void need_args(const Directive& d, int count) {
  if (static_cast<int>(d.args.size()) != count) {
    fail(d.line, d.op + " takes " + std::to_string(count) + " integer argument(s)");
  }
}

void need_range(const Directive& d, int value, int n, const std::string& what) {
  if (value < 0 || value >= n) {
    fail(d.line, what + " " + std::to_string(value) + " out of range for size " +
                     std::to_string(n));
  }
}

}  // namespace

StructureDoc parse_structure(std::istream& in) {
  auto dirs = read_directives(in, {{"kind", 0}, {"label", 1}});

  std::optional<bool> is_cat;
  std::optional<int> size;

  PartialTable table;
  std::vector<std::string> labels;
  std::vector<std::optional<Id>> plus, star, dom, ran;
  std::vector<bool> is_object;
  OrderRel leq, leq_l, leq_r;
  bool saw_plus = false, saw_star = false;
  bool saw_leq = false, saw_split = false;
  std::vector<std::vector<bool>> leq_seen, leq_l_seen, leq_r_seen;

  auto need_kind = [&](const Directive& d, bool cat_side) {
    if (!is_cat) fail(d.line, "kind must come before " + d.op);
    if (*is_cat != cat_side) {
      fail(d.line, d.op + (cat_side ? " only applies to cat documents"
                                    : " only applies to sgpd documents"));
    }
  };
  auto need_size = [&](const Directive& d) {
    if (!size) fail(d.line, "size must come before " + d.op);
    return *size;
  };

  for (const Directive& d : dirs) {
    if (d.op == "kind") {
      if (is_cat) fail(d.line, "duplicate kind directive");
      if (d.rest == "sgpd") is_cat = false;
      else if (d.rest == "cat") is_cat = true;
      else fail(d.line, "kind must be sgpd or cat");
    } else if (d.op == "size") {
      need_args(d, 1);
      if (!is_cat) fail(d.line, "kind must come before size");
      if (size) fail(d.line, "duplicate size directive");
      if (d.args[0] < 0) fail(d.line, "size must be nonnegative");
      size = d.args[0];
      const int n = *size;
      table = PartialTable(n);
      labels.assign(n, "");
      plus.assign(n, std::nullopt);
      star.assign(n, std::nullopt);
      dom.assign(n, std::nullopt);
      ran.assign(n, std::nullopt);
      is_object.assign(n, false);
      leq = OrderRel::discrete(n);
      leq_l = OrderRel::discrete(n);
      leq_r = OrderRel::discrete(n);
      leq_seen.assign(n, std::vector<bool>(n, false));
      leq_l_seen = leq_seen;
      leq_r_seen = leq_seen;
    } else if (d.op == "label") {
      const int n = need_size(d);
      need_range(d, d.args[0], n, "element");
      if (!labels[d.args[0]].empty()) fail(d.line, "duplicate label for element");
      labels[d.args[0]] = d.rest;
    } else if (d.op == "mul") {
      need_args(d, 3);
      const int n = need_size(d);
      for (int a : d.args) need_range(d, a, n, "element");
      if (table.defined(d.args[0], d.args[1])) fail(d.line, "duplicate mul entry");
      table.set(d.args[0], d.args[1], d.args[2]);
    } else if (d.op == "plus" || d.op == "star") {
      need_args(d, 2);
      need_kind(d, false);
      const int n = need_size(d);
      for (int a : d.args) need_range(d, a, n, "element");
      auto& map = d.op == "plus" ? plus : star;
      (d.op == "plus" ? saw_plus : saw_star) = true;
      if (map[d.args[0]]) fail(d.line, "duplicate " + d.op + " entry");
      map[d.args[0]] = d.args[1];
    } else if (d.op == "object") {
      need_args(d, 1);
      need_kind(d, true);
      const int n = need_size(d);
      need_range(d, d.args[0], n, "element");
      if (is_object[d.args[0]]) fail(d.line, "duplicate object entry");
      is_object[d.args[0]] = true;
    } else if (d.op == "dom" || d.op == "ran") {
      need_args(d, 2);
      need_kind(d, true);
      const int n = need_size(d);
      for (int a : d.args) need_range(d, a, n, "element");
      auto& map = d.op == "dom" ? dom : ran;
      if (map[d.args[0]]) fail(d.line, "duplicate " + d.op + " entry");
      map[d.args[0]] = d.args[1];
    } else if (d.op == "leq" || d.op == "leq_l" || d.op == "leq_r") {
      need_args(d, 2);
      need_kind(d, true);
      const int n = need_size(d);
      for (int a : d.args) need_range(d, a, n, "element");
      if (d.op == "leq") {
        if (saw_split) fail(d.line, "cannot mix leq with leq_l/leq_r");
        saw_leq = true;
        if (leq_seen[d.args[0]][d.args[1]]) fail(d.line, "duplicate leq pair");
        leq_seen[d.args[0]][d.args[1]] = true;
        leq.set(d.args[0], d.args[1]);
      } else {
        if (saw_leq) fail(d.line, "cannot mix leq with leq_l/leq_r");
        saw_split = true;
        auto& seen = d.op == "leq_l" ? leq_l_seen : leq_r_seen;
        if (seen[d.args[0]][d.args[1]]) fail(d.line, "duplicate " + d.op + " pair");
        seen[d.args[0]][d.args[1]] = true;
        (d.op == "leq_l" ? leq_l : leq_r).set(d.args[0], d.args[1]);
      }
    } else {
      fail(d.line, "unknown directive " + d.op);
    }
  }

  if (!is_cat) throw InputError("missing kind directive");
  if (!size) throw InputError("missing size directive");
  const int n = *size;

  std::vector<std::string> final_labels(n);
  bool any_label = false;
  for (Id i = 0; i < n; ++i) {
    final_labels[i] = labels[i];
    if (!labels[i].empty()) any_label = true;
  }
  if (any_label) table.set_labels(final_labels);

  auto collapse = [&](std::vector<std::optional<Id>>& m, bool saw,
                      const std::string& what) -> std::optional<std::vector<Id>> {
    if (!saw) return std::nullopt;
    std::vector<Id> out(n);
    for (Id i = 0; i < n; ++i) {
      if (!m[i]) throw InputError(what + " unspecified for element " + std::to_string(i));
      out[i] = *m[i];
    }
    return out;
  };

  if (!*is_cat) {
    UnaryStructure u;
    u.table = std::move(table);
    u.plus = collapse(plus, saw_plus, "plus");
    u.star = collapse(star, saw_star, "star");
    return u;
  }

  CatDoc doc;
  doc.cat.comp = std::move(table);
  for (Id e = 0; e < n; ++e) {
    if (is_object[e]) doc.cat.objects.push_back(e);
  }
  auto dom_v = collapse(dom, true, "dom");
  auto ran_v = collapse(ran, true, "ran");
  doc.cat.dom = std::move(*dom_v);
  doc.cat.ran = std::move(*ran_v);
  if (saw_leq) doc.leq = leq;
  if (saw_split) {
    doc.leq_l = leq_l;
    doc.leq_r = leq_r;
  }
  return doc;
}

StructureDoc parse_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_structure(in);
}

namespace {

void render_labels(std::ostringstream& os, const PartialTable& t) {
  const auto& labels = t.labels();
  for (Id i = 0; i < static_cast<Id>(labels.size()); ++i) {
    if (!labels[i].empty()) os << "label " << i << " " << labels[i] << "\n";
  }
}

void render_table(std::ostringstream& os, const PartialTable& t) {
  for (Id i = 0; i < t.size(); ++i) {
    for (Id j = 0; j < t.size(); ++j) {
      if (auto p = t.product(i, j)) os << "mul " << i << " " << j << " " << *p << "\n";
    }
  }
}

void render_order(std::ostringstream& os, const std::string& op, const OrderRel& r) {
  for (auto [i, j] : r.pairs()) {
    if (i != j) os << op << " " << i << " " << j << "\n";
  }
}

}  // namespace

std::string serialize_structure(const StructureDoc& doc) {
  std::ostringstream os;
  if (std::holds_alternative<UnaryStructure>(doc)) {
    const auto& u = std::get<UnaryStructure>(doc);
    os << "kind sgpd\nsize " << u.size() << "\n";
    render_labels(os, u.table);
    render_table(os, u.table);
    if (u.plus) {
      for (Id i = 0; i < u.size(); ++i) os << "plus " << i << " " << (*u.plus)[i] << "\n";
    }
    if (u.star) {
      for (Id i = 0; i < u.size(); ++i) os << "star " << i << " " << (*u.star)[i] << "\n";
    }
    return os.str();
  }

  const auto& d = std::get<CatDoc>(doc);
  const int n = d.cat.size();
  os << "kind cat\nsize " << n << "\n";
  render_labels(os, d.cat.comp);
  for (Id e : d.cat.objects) os << "object " << e << "\n";
  for (Id x = 0; x < n; ++x) os << "dom " << x << " " << d.cat.dom[x] << "\n";
  for (Id x = 0; x < n; ++x) os << "ran " << x << " " << d.cat.ran[x] << "\n";
  render_table(os, d.cat.comp);
  if (d.leq) render_order(os, "leq", *d.leq);
  if (d.leq_l) render_order(os, "leq_l", *d.leq_l);
  if (d.leq_r) render_order(os, "leq_r", *d.leq_r);
  return os.str();
}

MapDoc parse_map(std::istream& in) {
  auto dirs = read_directives(in, {{"src", 0}, {"dst", 0}});
  MapDoc doc;
  for (const Directive& d : dirs) {
    if (d.op == "src" || d.op == "dst") {
      auto& path = d.op == "src" ? doc.src_path : doc.dst_path;
      if (!path.empty()) fail(d.line, "duplicate " + d.op + " directive");
      path = d.rest;
    } else if (d.op == "send") {
      need_args(d, 2);
      if (d.args[0] < 0 || d.args[1] < 0) fail(d.line, "send indices must be nonnegative");
      for (const auto& [i, j] : doc.entries) {
        if (i == d.args[0]) fail(d.line, "duplicate send entry for element");
      }
      doc.entries.emplace_back(d.args[0], d.args[1]);
    } else {
      fail(d.line, "unknown directive " + d.op);
    }
  }
  if (doc.src_path.empty()) throw InputError("missing src directive");
  if (doc.dst_path.empty()) throw InputError("missing dst directive");
  return doc;
}

MapDoc parse_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  MapDoc doc = parse_map(in);
  namespace fs = std::filesystem;
  fs::path base = fs::path(path).parent_path();
  for (std::string* p : {&doc.src_path, &doc.dst_path}) {
    if (!p->empty() && fs::path(*p).is_relative()) *p = (base / *p).string();
  }
  return doc;
}

std::string serialize_map(const MapDoc& doc) {
  std::ostringstream os;
  os << "src " << doc.src_path << "\ndst " << doc.dst_path << "\n";
  auto entries = doc.entries;
  std::sort(entries.begin(), entries.end());
  for (auto [i, j] : entries) os << "send " << i << " " << j << "\n";
  return os.str();
}

CarrierMap resolve_map(const MapDoc& doc, int src_size, int dst_size) {
  CarrierMap m;
  m.src_size = src_size;
  m.dst_size = dst_size;
  m.send.assign(src_size, -1);
  for (auto [i, j] : doc.entries) {
    if (i >= src_size) throw InputError("send source " + std::to_string(i) + " out of range");
    if (j >= dst_size) throw InputError("send target " + std::to_string(j) + " out of range");
    m.send[i] = j;
  }
  for (Id i = 0; i < src_size; ++i) {
    if (m.send[i] < 0) throw InputError("send unspecified for element " + std::to_string(i));
  }
  return m;
}

}  // namespace sgpd
