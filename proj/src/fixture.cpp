#include <srg/fixture.hpp>

#include <json.hpp>

#include <fstream>

namespace srg {

namespace {

Int int_from_json(const nlohmann::json& j) { return Int(j.get<std::string>()); }

}  // namespace

ProblemFixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open fixture file " + path);
    nlohmann::json j;
    in >> j;

    ProblemFixture fixture;
    fixture.name = j.at("name").get<std::string>();
    fixture.params.a = int_from_json(j.at("params").at("a"));
    fixture.params.c = int_from_json(j.at("params").at("c"));
    fixture.params.e = int_from_json(j.at("params").at("e"));
    fixture.star_complement_g6 = j.at("star_complement_g6").get<std::string>();

    if (j.contains("R")) {
        std::vector<std::vector<Rat>> rows;
        for (const auto& row : j.at("R")) {
            std::vector<Rat> entries;
            for (const auto& cell : row) entries.emplace_back(Rat(cell.get<std::string>()));
            rows.push_back(std::move(entries));
        }
        fixture.r = ExactMatrix::from_rows(rows);
    }
    if (j.contains("B")) {
        std::vector<std::string> rows;
        for (const auto& row : j.at("B")) rows.push_back(row.get<std::string>());
        fixture.b = BitMatrix::from_strings(rows);
    }
    return fixture;
}

std::string fixture_to_json(const ProblemFixture& fixture) {
    nlohmann::ordered_json j;
    j["name"] = fixture.name;
    j["params"] = {{"a", fixture.params.a.get_str()},
                   {"c", fixture.params.c.get_str()},
                   {"e", fixture.params.e.get_str()}};
    j["star_complement_g6"] = fixture.star_complement_g6;
    if (fixture.r) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < fixture.r->rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t jj = 0; jj < fixture.r->cols(); ++jj)
                row.push_back(rat_to_string(fixture.r->at(i, jj)));
            rows.push_back(std::move(row));
        }
        j["R"] = std::move(rows);
    }
    if (fixture.b) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < fixture.b->rows(); ++i) rows.push_back(fixture.b->row_string(i));
        j["B"] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

}  // namespace srg
