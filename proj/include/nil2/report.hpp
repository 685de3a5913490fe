#pragma once

#include <iosfwd>
#include <json.hpp>

#include "nil2/decide.hpp"

namespace nil2 {

// Stable JSON shapes: every verdict object carries the fields
// {answer, certificate, trace, citations}.
nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const RankLocus& locus);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const EquivClassReport& r);
nlohmann::json to_json(const PaperExampleReport& r);

void print_verdict(std::ostream& os, const Verdict& v);
void print_equiv_report(std::ostream& os, const EquivClassReport& r);
void print_paper_example(std::ostream& os, const PaperExampleReport& r);

}  // namespace nil2
