// Reconstruction problem fixtures: parameter triple + graph6 of the star
// complement + optional explicit R + optional B (rows of bit strings), as JSON.
#pragma once

#include <srg/bitmatrix.hpp>
#include <srg/exactmat.hpp>
#include <srg/params.hpp>

#include <optional>
#include <string>

namespace srg {

struct ProblemFixture {
    std::string name;
    ParamTriple params;
    std::string star_complement_g6;
    std::optional<ExactMatrix> r;
    std::optional<BitMatrix> b;
};

ProblemFixture load_fixture(const std::string& path);
std::string fixture_to_json(const ProblemFixture& fixture);

}  // namespace srg
