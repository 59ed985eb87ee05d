#include "pnsbounds/scm.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "pnsbounds/errors.hpp"
#include "pnsbounds/rng.hpp"

namespace pnsbounds {

void validate(const ScmModel& model) {
    auto check_theta = [](double t, const std::string& what) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw validation_error(what + " = " + std::to_string(t) +
                                   " is not a Bernoulli parameter in [0, 1]");
        }
    };
    check_theta(model.theta_x, "theta_x");
    check_theta(model.theta_y, "theta_y");
    for (int i = 0; i < kNumConfounders; ++i) {
        check_theta(model.theta_z[i], "theta_z[" + std::to_string(i) + "]");
    }
}

double m_x(const ScmModel& model, std::uint32_t z_bits) {
    double sum = 0.0;
    for (int i = 0; i < kNumConfounders; ++i) {
        if (z_bits >> i & 1u) sum += model.a[i];
    }
    return sum;
}

double m_y(const ScmModel& model, std::uint32_t z_bits) {
    double sum = 0.0;
    for (int i = 0; i < kNumConfounders; ++i) {
        if (z_bits >> i & 1u) sum += model.b[i];
    }
    return sum;
}

bool f_x(const ScmModel& model, std::uint32_t z_bits, bool u_x) {
    return m_x(model, z_bits) + (u_x ? 1.0 : 0.0) > 0.5;
}

bool f_y(const ScmModel& model, bool x, std::uint32_t z_bits, bool u_y) {
    const double v = (x ? model.c : 0.0) + m_y(model, z_bits) + (u_y ? 1.0 : 0.0);
    return (0.0 < v && v < 1.0) || (1.0 < v && v < 2.0);
}

ScmModel generate_model(std::uint64_t seed) {
    SplitMix64 stream(seed);
    auto uniform_signed = [&] { return 2.0 * stream.next_unit() - 1.0; };

    ScmModel model;
    for (int i = 0; i < kNumConfounders; ++i) model.a[i] = uniform_signed();
    for (int i = 0; i < kNumConfounders; ++i) model.b[i] = uniform_signed();
    model.c = uniform_signed();
    model.theta_x = stream.next_unit();
    model.theta_y = stream.next_unit();
    for (int i = 0; i < kNumConfounders; ++i) model.theta_z[i] = stream.next_unit();
    model.name = "seed-" + std::to_string(seed);
    return model;
}

namespace {

using nlohmann::json;

std::array<double, kNumConfounders> parse_coefficients(const json& doc, const std::string& key) {
    if (!doc.contains(key)) {
        throw validation_error("model JSON is missing key \"" + key + "\"");
    }
    const json& arr = doc.at(key);
    if (!arr.is_array() || arr.size() != kNumConfounders) {
        throw validation_error("model JSON key \"" + key + "\" must be an array of exactly " +
                               std::to_string(kNumConfounders) + " numbers");
    }
    std::array<double, kNumConfounders> out{};
    for (int i = 0; i < kNumConfounders; ++i) {
        if (!arr[i].is_number()) {
            throw validation_error("model JSON key \"" + key + "\" has a non-numeric entry at index " +
                                   std::to_string(i));
        }
        out[i] = arr[i].get<double>();
    }
    return out;
}

double parse_number(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc.at(key).is_number()) {
        throw validation_error("model JSON is missing numeric key \"" + key + "\"");
    }
    return doc.at(key).get<double>();
}

}  // namespace

ScmModel load_model(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("model JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw validation_error("model JSON must be an object");
    }

    ScmModel model;
    model.a = parse_coefficients(doc, "a");
    model.b = parse_coefficients(doc, "b");
    model.c = parse_number(doc, "c");
    model.theta_x = parse_number(doc, "theta_x");
    model.theta_y = parse_number(doc, "theta_y");
    model.theta_z = parse_coefficients(doc, "theta_z");
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) {
            throw validation_error("model JSON key \"name\" must be a string");
        }
        model.name = doc.at("name").get<std::string>();
    }
    validate(model);
    return model;
}

ScmModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open model file: " + path);
    }
    return load_model(in);
}

void save_model(const ScmModel& model, std::ostream& out) {
    json doc;
    doc["name"] = model.name;
    doc["a"] = model.a;
    doc["b"] = model.b;
    doc["c"] = model.c;
    doc["theta_x"] = model.theta_x;
    doc["theta_y"] = model.theta_y;
    doc["theta_z"] = model.theta_z;
    out << doc.dump(2) << "\n";
}

void save_model_file(const ScmModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw validation_error("cannot open output file: " + path);
    }
    save_model(model, out);
}

}  // namespace pnsbounds
