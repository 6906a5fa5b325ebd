#pragma once

#include <string>

#include "rainbow/analysis.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/fmc.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

// Stable JSON mirrors of the interchange objects. The grid text format stays
// the primary format; these are opt-in.

std::string certificate_json(const CycleCertificate& cert);
std::string classification_json(const Classification3x3& cls);
std::string grid_json(const LatinRectangle& rect);

std::string search_outcome_json(const SearchOutcome& outcome);
std::string fmc_report_json(const FmcReport& report);

std::string size7_report_json(const Size7ClassReport& report);
std::string size6_report_json(const Size6ClassReport& report);
std::string k37_report_json(const K37StructureReport& report);

} // namespace rainbow
