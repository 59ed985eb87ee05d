#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace pnsbounds {

inline constexpr int kNumConfounders = 20;

/// Binary-treatment / binary-outcome structural model with 20 independent
/// binary confounders Z_1..Z_20:
///
///   Z_i = U_{Z_i}
///   X   = 1  iff  M_X + U_X > 0.5,            M_X = a . Z
///   Y   = 1  iff  C*X + M_Y + U_Y in (0,1) or (1,2),   M_Y = b . Z
///
/// All threshold comparisons are strict; values landing exactly on a
/// boundary take the 0 branch. U_X, U_Y, U_{Z_i} are Bernoulli with the
/// theta parameters below.
struct ScmModel {
    std::array<double, kNumConfounders> a{};        // M_X coefficients
    std::array<double, kNumConfounders> b{};        // M_Y coefficients
    double c = 0.0;                                 // treatment coefficient in f_Y
    double theta_x = 0.0;                           // P(U_X = 1)
    double theta_y = 0.0;                           // P(U_Y = 1)
    std::array<double, kNumConfounders> theta_z{};  // P(U_{Z_i} = 1)
    std::string name;
};

/// One joint assignment of the 22 exogenous bits. Bit i of z_bits is
/// U_{Z_{i+1}}.
struct ExogenousState {
    std::uint32_t z_bits = 0;
    bool u_x = false;
    bool u_y = false;
};

/// Throw validation_error unless every theta lies in [0, 1].
void validate(const ScmModel& model);

/// M_X = sum of a[i] over set bits of z_bits, accumulated in ascending
/// index order.
double m_x(const ScmModel& model, std::uint32_t z_bits);

/// M_Y, same accumulation rule.
double m_y(const ScmModel& model, std::uint32_t z_bits);

/// Structural equation for X: 1 iff M_X + U_X > 0.5.
bool f_x(const ScmModel& model, std::uint32_t z_bits, bool u_x);

/// Structural equation for Y: 1 iff C*x + M_Y + U_Y lies strictly inside
/// (0,1) or (1,2).
bool f_y(const ScmModel& model, bool x, std::uint32_t z_bits, bool u_y);

/// Random model: a, b, c uniform on [-1, 1]; all 22 thetas uniform on
/// [0, 1]. Deterministic given the seed. Draw order: a[0..19], b[0..19],
/// c, theta_x, theta_y, theta_z[0..19].
ScmModel generate_model(std::uint64_t seed);

enum class Preset { model1, model2 };

/// The two fixed reference models, transcribed constants. Also shipped as
/// data/model1.json and data/model2.json.
const ScmModel& preset(Preset which);

/// JSON schema: {name, a (array[20]), b (array[20]), c, theta_x, theta_y,
/// theta_z (array[20])}. Throws validation_error with a schema diagnostic
/// on malformed input.
ScmModel load_model(std::istream& in);
ScmModel load_model_file(const std::string& path);
void save_model(const ScmModel& model, std::ostream& out);
void save_model_file(const ScmModel& model, const std::string& path);

}  // namespace pnsbounds
