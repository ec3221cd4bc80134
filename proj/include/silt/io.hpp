#ifndef SILT_IO_HPP
#define SILT_IO_HPP

#include <string>

#include "silt/report.hpp"
#include "silt/torsion.hpp"

namespace silt {

// JSON file formats. Every file records the field modulus; loaders refuse a
// file whose modulus differs from the algebra it is checked against. Paths
// inside a file ("algebra": "...") resolve relative to the file's directory.
// All parse problems surface as Error(Parse, "<file>: <field>: <reason>").

// p_override replaces the file's modulus when nonzero (same quiver, new field).
AlgebraPtr load_algebra(const std::string& path, i64 p_override = 0);
void save_algebra(const AlgebraPtr& a, const std::string& path);

// The module file names its algebra; the loader checks shape, modulus and
// relations against the instance passed in (pointer identity matters for
// every downstream operation, so the caller owns algebra loading).
Module load_module(const std::string& path, const AlgebraPtr& a);
void save_module(const Module& m, const std::string& path, const std::string& algebra_ref);

// Two-term complex of projectives, stored as vertex multisets and a matrix of
// algebra-element coordinate vectors.
Presentation load_presentation(const std::string& path, const AlgebraPtr& a);
void save_presentation(const Presentation& s, const std::string& path,
                       const std::string& algebra_ref);

// Catalog cache: module files next to an index carrying the hom/ext tables.
// Loading revalidates through the user-supplied enumeration and cross-checks
// the cached tables.
IndSet load_indset(const std::string& path, const AlgebraPtr& a);
void save_indset(const IndSet& ind, const std::string& path, const std::string& algebra_ref);

// Deterministic serialization: key order fixed, no whitespace variance.
std::string report_json(const Report& r);
Report parse_report_json(const std::string& text);

// Census document: {"verdict", "count", "classes": [{"module", "class",
// "ext_projectives"}]}. files[k] names the representative of class k; pass
// symbolic names when nothing was written to disk.
std::string enumerate_json(const std::vector<SiltingClass>& classes,
                           const std::vector<std::string>& files);

}  // namespace silt

#endif
