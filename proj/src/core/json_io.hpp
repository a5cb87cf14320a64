#pragma once

#include <string>

#include "core/cochain.hpp"
#include "core/cohomology.hpp"
#include "core/extension.hpp"
#include "core/group.hpp"
#include "core/projrep.hpp"

namespace projcoh {

// Canonical JSON serialization: sorted keys, compact, trailing newline.
// parse(serialize(x)) == x and serialize(parse(bytes)) == bytes for files
// this library wrote.

std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text);

std::string cocycle_to_json(const Cochain2& w);
Cochain2 cocycle_from_json(const std::string& text);

std::string cochain1_to_json(const Cochain1& f);
Cochain1 cochain1_from_json(const std::string& text);

// Public presentation format: invariant factors, coefficient modulus and
// generator tables. Solve data is cache-internal and not part of this form.
std::string presentation_to_json(const FinAbPresentation& p);
FinAbPresentation presentation_from_json(const std::string& text);

std::string rep_to_json(const FiniteGroup& g, const ProjectiveRep& r);
// Returns the embedded group together with the representation. Parsing is
// structural (shapes, permutation bijectivity); whether the operators really
// satisfy the claimed relation is verify_relations' job.
std::pair<FiniteGroup, ProjectiveRep> rep_from_json(const std::string& text);

std::string extension_to_json(const CentralExtension& e);
CentralExtension extension_from_json(const std::string& text);

// Dense complex-matrix text export for small representations (d <= 64):
// entries "0" or "k/m" meaning exp(2 pi i k/m).
std::string rep_to_dense_text(const ProjectiveRep& r);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace projcoh
