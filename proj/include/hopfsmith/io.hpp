#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hopfsmith/mates.hpp"
#include "hopfsmith/tannaka.hpp"
#include "hopfsmith/walking.hpp"

namespace hopfsmith {

using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"maxDim", "generators": [{"name","dim","src","tgt","invertible"}], "relations": [{"dim","lhs","rhs","oriented"}]}
json presentation_json(const Presentation& P);
Presentation presentation_from_json(const json& j);
// adds "basepoint"
json pointed_json(const PointedPresentation& P);
PointedPresentation pointed_from_json(const json& j);

// presentation JSON plus a "retract" header of generator names and terms
json retract_json(const RetractRecord& R);
RetractRecord retract_from_json(const json& j);

// {"field", "dim", "grading", "braiding", "m", "u", "delta", "epsilon"}, scalars as strings, matrices row-major
json bialgebra_json(const Bialgebra& B);
Bialgebra bialgebra_from_json(const json& j);

json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Field* F, const json& j, std::size_t rows, std::size_t cols, const std::string& what);

// {"bialgebra": object | file | fixture name, "comodules": [{"dim","rho"}], "depth"}
GeneratingFamily family_from_json(const json& j, const std::filesystem::path& dir = ".");
json family_json(const GeneratingFamily& F, bool inline_bialgebra = true);

json read_json(const std::filesystem::path& p);
void write_json(const std::filesystem::path& p, const json& j);

// Built-in names: point, globe0..globe4, mnd, adj, o2, eo2 (presentations);
// Q[Z/2] style names or short keys z2, s3, fz3, monoid, sweedler, superline, taft3, corrupted (bialgebras).
std::optional<PointedPresentation> builtin_presentation(const std::string& name);
std::optional<Bialgebra> builtin_bialgebra(const std::string& name);

// Per-check statuses pass | fail | unknown. Exit code: 1 on any fail, else 2 on any unknown, else 0.
struct RunReport {
    json data = json::object();
    json checks = json::array();

    void record(const std::string& name, const std::string& status, const std::string& witness = "");
    void check(const std::string& name, bool ok, const std::string& witness = "");
    int exit_code() const;
    json to_json(const std::vector<std::string>& command, std::optional<double> timing_ms) const;
};

// A path to a JSON file, else a built-in name.
PointedPresentation load_presentation(const std::string& spec);
Bialgebra load_bialgebra(const std::string& spec);
GeneratingFamily load_family(const std::string& spec);

}  // namespace hopfsmith
