// io.cpp

#include "otlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace otlab {

using nlohmann::json;

json rational_to_json(const Rational& r) {
    return json{{"num", r.num().to_string()}, {"den", r.den().to_string()}};
}

Rational rational_from_json(const json& j) {
    return Rational(BigInt::from_string(j.at("num").get<std::string>()),
                    BigInt::from_string(j.at("den").get<std::string>()));
}

namespace {

json scaled_to_json(const Rational& r, std::int64_t sqrt_div) {
    json j = rational_to_json(r);
    j["sqrt_div"] = sqrt_div;
    return j;
}

}  // namespace

json measure_to_json(const LatticeMeasure& m) {
    json j;
    j["step"] = scaled_to_json(m.step, m.sqrt_div);
    j["offset"] = scaled_to_json(m.offset, m.sqrt_div);
    j["points"] = m.points;
    json ws = json::array();
    for (const Rational& w : m.weights) ws.push_back(rational_to_json(w));
    j["weights"] = ws;
    return j;
}

LatticeMeasure measure_from_json(const json& j) {
    Rational step = rational_from_json(j.at("step"));
    Rational offset = rational_from_json(j.at("offset"));
    std::int64_t sd = j.at("step").at("sqrt_div").get<std::int64_t>();
    std::int64_t sd_off = j.at("offset").at("sqrt_div").get<std::int64_t>();
    if (sd_off != sd && !offset.is_zero())
        throw std::invalid_argument("measure: step and offset radicals differ");
    std::vector<std::int64_t> points = j.at("points").get<std::vector<std::int64_t>>();
    std::vector<Rational> weights;
    for (const json& w : j.at("weights")) weights.push_back(rational_from_json(w));
    return LatticeMeasure::make(std::move(step), std::move(offset), sd, std::move(points),
                                std::move(weights));
}

json plan_to_json(const TransportPlan& p) {
    json j;
    j["source"] = measure_to_json(p.source);
    j["target"] = measure_to_json(p.target);
    json moves = json::array();
    for (const Move& m : p.moves)
        moves.push_back(json{{"from", m.from}, {"to", m.to}, {"mass", rational_to_json(m.mass)}});
    j["moves"] = moves;
    return j;
}

TransportPlan plan_from_json(const json& j) {
    TransportPlan p;
    p.source = measure_from_json(j.at("source"));
    p.target = measure_from_json(j.at("target"));
    for (const json& m : j.at("moves")) {
        Move mv{m.at("from").get<std::size_t>(), m.at("to").get<std::size_t>(),
                rational_from_json(m.at("mass"))};
        if (mv.from >= p.source.size() || mv.to >= p.target.size())
            throw std::invalid_argument("plan: move index out of range");
        p.moves.push_back(std::move(mv));
    }
    return p;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << body;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace otlab
