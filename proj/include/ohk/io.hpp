#ifndef OHK_IO_HPP
#define OHK_IO_HPP

#include <functional>
#include <map>

#include <json.hpp>

#include "ohk/adjunction.hpp"

namespace ohk {

using TheoryResolver = std::function<TheoryPresentation(const std::string&)>;

/// Canonical .lmod rendering (explicit dim/basis/delta/epsilon/opmap form).
std::string print_model(const TCoalgebraModel& m);

/// .lmod rendering of a set-model (setmodel/elem/table form); the field in
/// the header is used when the file is lifted on parse.
std::string print_set_model(const SetModel& s, Field f);

/// Parses either .lmod form; a setmodel block is lifted through the
/// adjunction. Theory names are resolved through `resolve` (defaults to
/// the builtin presentations). Throws ParseError on malformed input.
TCoalgebraModel parse_model(const std::string& text,
                            const TheoryResolver& resolve = {});

/// Canonical .lhom rendering.
std::string print_hom(const ModelHom& h);

/// Parses a .lhom against models resolved by name.
ModelHom parse_hom(const std::string& text,
                   const std::map<std::string, TCoalgebraModel>& models);

/// Versioned JSON report: {schema: 1, command, ok, checks: [...]} with
/// witnesses rendered as sparse coefficient lists over labeled bases.
nlohmann::ordered_json report_json(const std::string& command,
                                   const CheckReport& rep);

/// Human-readable one-line-per-check rendering of a report.
std::string report_text(const CheckReport& rep);

} // namespace ohk

#endif
