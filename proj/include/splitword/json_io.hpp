#ifndef SPLITWORD_JSON_IO_HPP
#define SPLITWORD_JSON_IO_HPP

#include <json.hpp>

#include "splitword/classify.hpp"
#include "splitword/construct3.hpp"

namespace splitword {

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json word_to_json(const Word& w, const Graph& g);
nlohmann::json labelling_to_json(const Labelling& lab, const SplitPartition& p, const Graph& g);
nlohmann::json witness_to_json(const Witness& w, const Graph& g);
nlohmann::json classification_to_json(const Classification& c, const Graph& g);
nlohmann::json trace_to_json(const ConstructionTrace& t, const Graph& g);
nlohmann::json verify_report_to_json(const VerifyReport& r, const Graph& g);

}  // namespace splitword

#endif
