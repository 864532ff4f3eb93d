#pragma once

#include <string>

#include "bochvar/equivalence.hpp"
#include "bochvar/plonka.hpp"

namespace bochvar {

// ============================================================================
// JSON file formats
//
// Algebra file:
//   { "name": "...", "elements": ["0","half","1"],
//     "ops": { "zero": "0", "one": "1",
//              "not": {"0":"1",...}, "j2": {...},      // j2 optional
//              "and": [[...],...], "or": [[...],...] } }  // row-major
//
// Bochvar-system file:
//   { "boolean": {"atoms": ["p","q"]}  |  <inline algebra object>,
//     "subsemilattice": ["1","p"] }                    // "1" alias accepted
//
// Direct-system file:
//   { "index": {"elements": ["bot","top"], "order": [["bot","top"]]},
//     "fibres": {"bot": <algebra object>, ...},
//     "homs": {"bot->top": {"0":"half",...}} }         // covering pairs suffice
//
// Loading a direct system prefixes every fibre element with its index
// ("bot:0") so carriers are disjoint regardless of how the file names them.
// ============================================================================

enum class FileKind { algebra, bochvar_system, direct_system };

/// Decides by top-level keys: "boolean" -> system, "index" -> direct system,
/// otherwise algebra.
FileKind detect_file_kind(const std::string& json_text);

AlgebraData parse_algebra_json(const std::string& json_text);
std::string algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra load_algebra(const std::string& path);
void save_algebra(const std::string& path, const FiniteAlgebra& a);

BochvarSystem parse_system_json(const std::string& json_text);
std::string system_to_json(const BochvarSystem& s);
BochvarSystem load_system(const std::string& path);
void save_system(const std::string& path, const BochvarSystem& s);

SystemData parse_direct_system_json(const std::string& json_text);
std::string direct_system_to_json(const SemilatticeDirectSystem& s);
SemilatticeDirectSystem load_direct_system(const std::string& path);
void save_direct_system(const std::string& path, const SemilatticeDirectSystem& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bochvar
