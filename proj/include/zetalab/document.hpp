#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "zetalab/blowup.hpp"
#include "zetalab/curvette.hpp"
#include "zetalab/realizer.hpp"
#include "zetalab/resolution.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

using Json = nlohmann::json;

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& doc);

/// Parse failures throw ValidationError with line or field context; unknown
/// keys are rejected.
Json parse_json(std::string_view text);

Json to_json(const BigRational& r);
Json to_json(const UniPoly& p);
Json to_json(const RationalFunction& r);
Json to_json(const CyclotomicDivisor& z);
Json to_json(const ResolutionData& rd);
Json to_json(const FormSpec& w);
Json to_json(const BlowupProgram& p);
Json to_json(const ZetaResult& z);
Json to_json(const EigenvalueReport& r);
Json to_json(const RealizationCertificate& c);
Json to_json(const PrincipleReport& r);
Json to_json(const TheoremReport& r);

ResolutionData resdata_from_json(const Json& doc);
FormSpec form_from_json(const Json& doc);
BlowupProgram program_from_json(const Json& doc);

std::string serialize(const ResolutionData& rd);
ResolutionData parse_resdata(std::string_view text);
FormSpec parse_form(std::string_view text);
BlowupProgram parse_program(std::string_view text);

/// Human readable "num / ((nu + N s)^k ...)".
std::string display(const ZetaResult& z);

}  // namespace zetalab
