#pragma once

#include "json.hpp"

#include "adr/approx.hpp"
#include "adr/corpus.hpp"

namespace adr {

using ojson = nlohmann::ordered_json;

ojson algebra_json(const BoundAlgebra& a);
ojson rep_json(const Rep& m);
ojson sc_json(const ADRContext& ctx, const SCModule& m);
ojson adr_json(const ADRContext& ctx);
ojson standards_json(const ADRContext& ctx, const StandardFamily& fam);
ojson filtration_json(const ADRContext& ctx, const SCModule& m, const DeltaSSFiltration& f);
ojson approx_json(const ADRContext& ctx, const Rep& m, const ApproxResult& a);
ojson resolution_json(const ADRContext& ctx, const SCModule& m, const ResolutionReport& r);
ojson ext_json(const ADRContext& ctx, const ExtReport& r);
ojson counterexample_json(const CounterexampleReport& r);
ojson corpus_json(const Corpus& c);

std::string algebra_text(const BoundAlgebra& a);
std::string rep_text(const Rep& m);
std::string sc_text(const ADRContext& ctx, const SCModule& m);
std::string adr_text(const ADRContext& ctx);
std::string standards_text(const ADRContext& ctx, const StandardFamily& fam);
std::string filtration_text(const ADRContext& ctx, const SCModule& m, const DeltaSSFiltration& f);
std::string approx_text(const ADRContext& ctx, const Rep& m, const ApproxResult& a);
std::string resolution_text(const ADRContext& ctx, const SCModule& m, const ResolutionReport& r);
std::string ext_text(const ADRContext& ctx, const ExtReport& r);
std::string counterexample_text(const CounterexampleReport& r);
std::string corpus_text(const Corpus& c);

}  // namespace adr
