#pragma once

#include <string>

#include "json.hpp"
#include "pds/catalog.hpp"
#include "pds/decide.hpp"
#include "pds/zerofree.hpp"

namespace pds {

using Json = nlohmann::json;

/// { "zeta_order": L, "pieces": [ { "from": "0", "to": "1/2", "value": "1" }, ... ] }.
/// Throws ParseError (with line/column for syntax errors) or InvalidArgument for bad tilings.
StepFunction parse_step_json(const std::string& text);
Json step_to_json(const StepFunction& phi);

/// Rationals as "p/q" strings, other values as {"zeta_order": L, "literal": ...}.
Json cyclo_to_json(const CycloNumber& x);
Json interval_to_json(const Interval& x);
Json interval_to_json(const ComplexInterval& z);
Json poly_to_json(const DirichletPoly& p);
Json poly_to_json(const BohrPoly& q);
Json character_to_json(const DirichletCharacter& psi);
Json certificate_to_json(const Certificate& c);
Json zero_verdict_to_json(const ZeroFreeVerdict& v);
/// { status, t, character, polynomial, certificate, reasons, ... }.
Json verdict_to_json(const CompletenessVerdict& v);

Json scan_to_json(const ScanReport& r);
/// "descriptor,status,certificate" rows.
std::string scan_to_csv(const ScanReport& r);
std::string scan_to_table(const ScanReport& r);
/// "examined=N complete=N incomplete=N undetermined=N".
std::string scan_summary(const ScanReport& r);

}  // namespace pds
