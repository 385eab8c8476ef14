#pragma once

#include <json.hpp>

#include "rankone/converse.hpp"
#include "rankone/lens.hpp"
#include "rankone/miner.hpp"
#include "rankone/pform.hpp"

namespace rankone::cli {

using Json = nlohmann::ordered_json;

// Integers as numbers, everything else as "p/q" strings; round-trips through Weight::parse.
Json to_json(const Rational& r);
Json to_json(const Weight& w);
Json to_json(const WeightMultiset& m);
Json to_json(const CoincidenceResult& c);
Json to_json(const StringSet& s);
Json to_json(const ConverseReport& r);
Json to_json(const SpectrumTable& t);
Json to_json(const PFormDecomposition& d);
Json to_json(const PFormConverseReport& r);
Json to_json(const CoincidentFamily& f);
Json to_json(const ShiftedCoincidence& s);
Json to_json(const LensCounterexampleReport& r);

}  // namespace rankone::cli
