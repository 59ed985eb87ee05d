#include <doctest.h>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "pnsbounds/errors.hpp"
#include "pnsbounds/rng.hpp"
#include "pnsbounds/scm.hpp"

using namespace pnsbounds;

TEST_CASE("linear combinations") {
    const ScmModel& m1 = preset(Preset::model1);
    CHECK(m_x(m1, 0) == 0.0);
    CHECK(m_y(m1, 0) == 0.0);
    CHECK(m_x(m1, 1u) == 0.259223510143);  // only Z_1 active

    const ScmModel& m2 = preset(Preset::model2);
    const std::uint32_t all = (1u << kNumConfounders) - 1;
    CHECK(m_y(m2, all) == std::accumulate(m2.b.begin(), m2.b.end(), 0.0));
}

TEST_CASE("treatment equation is strict at the threshold") {
    ScmModel model;  // all coefficients zero
    CHECK(f_x(model, 0, true) == true);    // 0 + 1 > 0.5
    CHECK(f_x(model, 0, false) == false);  // 0 + 0 <= 0.5
    model.a[0] = 0.5;
    CHECK(f_x(model, 1u, false) == false);  // exactly 0.5 takes the 0 branch
    model.a[0] = 0.5000001;
    CHECK(f_x(model, 1u, false) == true);
}

TEST_CASE("outcome equation keeps both intervals open") {
    ScmModel model;
    auto with_b0 = [&](double b0, bool u_y) {
        model.b[0] = b0;
        return f_y(model, false, 1u, u_y);
    };
    CHECK(with_b0(0.5, false) == true);    // v = 0.5
    CHECK(with_b0(1.0, false) == false);   // v = 1 excluded
    CHECK(with_b0(-0.3, false) == false);  // below both intervals
    CHECK(with_b0(1.5, false) == true);    // v = 1.5
    CHECK(with_b0(1.0, true) == false);    // v = 2 excluded
    CHECK(with_b0(-1.0, true) == false);   // v = 0 excluded
    CHECK(with_b0(2.5, false) == false);   // above both intervals

    model = ScmModel{};
    model.c = 0.5;
    CHECK(f_y(model, true, 0, false) == true);    // v = 0.5 under treatment
    CHECK(f_y(model, false, 0, false) == false);  // v = 0 under control
}

TEST_CASE("generated models are deterministic and well formed") {
    const ScmModel one = generate_model(123);
    const ScmModel two = generate_model(123);
    CHECK(one.a == two.a);
    CHECK(one.b == two.b);
    CHECK(one.c == two.c);
    CHECK(one.theta_x == two.theta_x);
    CHECK(one.theta_y == two.theta_y);
    CHECK(one.theta_z == two.theta_z);
    CHECK(generate_model(124).a != one.a);

    // Law-of-large-numbers sanity across many models.
    const int count = 10000;
    double sum_a = 0.0, sum_b = 0.0, sum_c = 0.0, sum_tx = 0.0, sum_ty = 0.0, sum_tz = 0.0;
    for (int seed = 0; seed < count; ++seed) {
        const ScmModel model = generate_model(static_cast<std::uint64_t>(seed));
        CHECK_NOTHROW(validate(model));
        for (double v : model.a) {
            CHECK(v >= -1.0);
            CHECK(v < 1.0);
            sum_a += v;
        }
        for (double v : model.b) sum_b += v;
        sum_c += model.c;
        sum_tx += model.theta_x;
        sum_ty += model.theta_y;
        for (double v : model.theta_z) sum_tz += v;
    }
    CHECK(std::abs(sum_a / (20.0 * count)) <= 0.05);
    CHECK(std::abs(sum_b / (20.0 * count)) <= 0.05);
    CHECK(std::abs(sum_c / count) <= 0.05);
    CHECK(std::abs(sum_tx / count - 0.5) <= 0.02);
    CHECK(std::abs(sum_ty / count - 0.5) <= 0.02);
    CHECK(std::abs(sum_tz / (20.0 * count) - 0.5) <= 0.02);
}

TEST_CASE("counterfactual consistency: Y equals Y_x at the factual x") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        const ScmModel model = generate_model(rng.next());
        for (int draw = 0; draw < 500; ++draw) {
            const std::uint32_t z = static_cast<std::uint32_t>(rng.next()) &
                                    ((1u << kNumConfounders) - 1);
            const bool u_x = rng.next() & 1;
            const bool u_y = rng.next() & 1;
            const bool x_obs = f_x(model, z, u_x);
            const bool y_obs = f_y(model, x_obs, z, u_y);
            const bool y_cf = x_obs ? f_y(model, true, z, u_y) : f_y(model, false, z, u_y);
            CHECK(y_obs == y_cf);
        }
    }
}

namespace {

// FNV-1a over the "%.17g" rendering of every model constant, in the order
// a[0..19], b[0..19], c, theta_x, theta_y, theta_z[0..19].
std::uint64_t model_checksum(const ScmModel& model) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto feed = [&](double v) {
        char buf[40];
        const int len = std::snprintf(buf, sizeof buf, "%.17g,", v);
        for (int i = 0; i < len; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ULL;
        }
    };
    for (double v : model.a) feed(v);
    for (double v : model.b) feed(v);
    feed(model.c);
    feed(model.theta_x);
    feed(model.theta_y);
    for (double v : model.theta_z) feed(v);
    return hash;
}

}  // namespace

TEST_CASE("preset transcription is pinned") {
    const ScmModel& m1 = preset(Preset::model1);
    const ScmModel& m2 = preset(Preset::model2);

    // Spot values against the documented constants.
    CHECK(m1.c == -0.77953605542);
    CHECK(m1.a[0] == 0.259223510143);
    CHECK(m1.a[19] == -0.511585391002);
    CHECK(m1.b[0] == -0.792867111918);
    CHECK(m1.b[19] == 0.625621583197);
    CHECK(m1.theta_x == 0.601680857267);
    CHECK(m1.theta_y == 0.497668975278);
    CHECK(m1.theta_z[0] == 0.352913861526);
    CHECK(m1.theta_z[19] == 0.685879388218);

    CHECK(m2.c == 0.975140894243);
    CHECK(m2.a[0] == 0.843870221861);
    CHECK(m2.b[19] == -0.568046522383);
    CHECK(m2.theta_x == 0.29908139311);
    CHECK(m2.theta_y == 0.9226108109253);
    CHECK(m2.theta_z[0] == 0.524110233482);
    CHECK(m2.theta_z[19] == 0.074629121266);

    // Frozen checksums over all 83 constants per model; any transcription
    // drift fails here.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, model_checksum(m1));
    CHECK(std::string(buf) == "8dcaca0c24d44342");
    std::snprintf(buf, sizeof buf, "%016" PRIx64, model_checksum(m2));
    CHECK(std::string(buf) == "5e929687c6cccdd4");
}

TEST_CASE("shipped data files match the embedded presets") {
    const ScmModel file1 = load_model_file(std::string(PNSBOUNDS_DATA_DIR) + "/model1.json");
    const ScmModel file2 = load_model_file(std::string(PNSBOUNDS_DATA_DIR) + "/model2.json");
    const ScmModel& m1 = preset(Preset::model1);
    const ScmModel& m2 = preset(Preset::model2);

    CHECK(file1.a == m1.a);
    CHECK(file1.b == m1.b);
    CHECK(file1.c == m1.c);
    CHECK(file1.theta_x == m1.theta_x);
    CHECK(file1.theta_y == m1.theta_y);
    CHECK(file1.theta_z == m1.theta_z);
    CHECK(file1.name == "model1");

    CHECK(file2.a == m2.a);
    CHECK(file2.b == m2.b);
    CHECK(file2.c == m2.c);
    CHECK(file2.theta_x == m2.theta_x);
    CHECK(file2.theta_y == m2.theta_y);
    CHECK(file2.theta_z == m2.theta_z);
    CHECK(file2.name == "model2");
}

TEST_CASE("model JSON round-trips exactly") {
    const ScmModel model = generate_model(98765);
    std::stringstream buffer;
    save_model(model, buffer);
    const ScmModel back = load_model(buffer);
    CHECK(back.a == model.a);
    CHECK(back.b == model.b);
    CHECK(back.c == model.c);
    CHECK(back.theta_x == model.theta_x);
    CHECK(back.theta_y == model.theta_y);
    CHECK(back.theta_z == model.theta_z);
    CHECK(back.name == model.name);
}

TEST_CASE("malformed model JSON is rejected with a diagnostic") {
    auto load_text = [](const std::string& text) {
        std::istringstream in(text);
        return load_model(in);
    };
    CHECK_THROWS_AS(load_text("not json"), validation_error);
    CHECK_THROWS_AS(load_text("[]"), validation_error);
    CHECK_THROWS_AS(load_text(R"({"a": [1, 2], "b": [], "c": 0})"), validation_error);
    CHECK_THROWS_WITH_AS(load_text(R"({"b": [], "c": 0})"), doctest::Contains("\"a\""),
                         validation_error);

    // Out-of-range theta.
    ScmModel bad = generate_model(2);
    bad.theta_x = 1.5;
    std::stringstream buffer;
    save_model(bad, buffer);
    CHECK_THROWS_AS(load_model(buffer), validation_error);
    CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), validation_error);
}
