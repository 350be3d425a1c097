#ifndef SGPD_IO_HPP
#define SGPD_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sgpd/category.hpp"
#include "sgpd/morphisms.hpp"
#include "sgpd/order.hpp"
#include "sgpd/unary.hpp"

namespace sgpd {

// A parsed "kind cat" document: the category plus whichever order block the
// file carried.  `leq` is the single-order form; `leq_l`/`leq_r` the biordered
// form.  The two forms cannot be mixed in one file.
struct CatDoc {
  FiniteCategory cat;
  std::optional<OrderRel> leq;
  std::optional<OrderRel> leq_l;
  std::optional<OrderRel> leq_r;

  bool operator==(const CatDoc&) const = default;
};

using StructureDoc = std::variant<UnaryStructure, CatDoc>;

// Line-oriented format, one directive per line, "#" starts a comment:
//   kind sgpd|cat          (required, first directive)
//   size N                 (required before any indexed directive)
//   label i <name>
//   mul i j k              (product/composite i j = k; omitted = undefined)
//   plus i j / star i j    (sgpd only; if present must cover every element)
//   object i               (cat only)
//   dom i j / ran i j      (cat only; required total)
//   leq i j                (cat only, i <= j in the single order)
//   leq_l i j / leq_r i j  (cat only, biordered form)
// Orders are closed reflexively; no other closure is applied.
StructureDoc parse_structure(std::istream& in);
StructureDoc parse_structure_file(const std::string& path);

// Canonical rendering: directives grouped by kind, indices ascending,
// reflexive order pairs omitted.  parse(serialize(d)) reproduces d, except
// that an order block without strict pairs leaves no lines and parses back
// as absent; consumers treat the two identically.
std::string serialize_structure(const StructureDoc& doc);

// A carrier map between two structure files:
//   src <path>
//   dst <path>
//   send i j               (maps src element i to dst element j)
struct MapDoc {
  std::string src_path;
  std::string dst_path;
  std::vector<std::pair<Id, Id>> entries;

  bool operator==(const MapDoc&) const = default;
};

MapDoc parse_map(std::istream& in);
// Resolves relative src/dst paths against the map file's directory.
MapDoc parse_map_file(const std::string& path);
std::string serialize_map(const MapDoc& doc);

// Validates totality and ranges of the entries against the loaded sizes.
CarrierMap resolve_map(const MapDoc& doc, int src_size, int dst_size);

}  // namespace sgpd

#endif
