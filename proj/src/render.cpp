#include "gzeta/render.hpp"

namespace gzeta {

std::string group_name(const BurnsideContext& ctx) {
    return ctx.group().label().empty() ? "G" : ctx.group().label();
}

std::string class_name(const BurnsideContext& ctx, int h_class) {
    if (h_class == ctx.trivial_class()) return "(e)";
    if (h_class == ctx.full_class()) return group_name(ctx);
    return "H" + std::to_string(h_class);
}

namespace {

std::string basis_token(const BurnsideContext& ctx, int h_class) {
    return "[" + group_name(ctx) + "/" + class_name(ctx, h_class) + "]";
}

// signed term, e.g. "-1/2·[Z6/H2]" or "[Z6/Z6]"
std::string term_token(const BurnsideContext& ctx, const Rat& q, int h_class) {
    if (q == 1) return basis_token(ctx, h_class);
    if (q == -1) return "-" + basis_token(ctx, h_class);
    return rat_str(q) + "·" + basis_token(ctx, h_class);
}

} // namespace

std::string render_element(const BurnsideElement& b) {
    const auto& ctx = *b.context();
    std::string out;
    for (int h = 0; h < ctx.class_count(); ++h) {
        const Rat& q = b.coeff(h);
        if (q == 0) continue;
        std::string tok = term_token(ctx, q, h);
        if (out.empty()) {
            out = tok;
        } else if (tok.front() == '-') {
            out += " - " + tok.substr(1);
        } else {
            out += " + " + tok;
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_series(const GSeries& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k)
        out += "t^" + std::to_string(k) + ": " + render_element(s.coeff(k)) + "\n";
    return out;
}

std::string render_factors(const std::vector<ExponentTerm>& factors) {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += "·";
        out += "(1-t^" + std::to_string(f.m) + ")^{" + render_element(-f.exponent) + "}";
    }
    return out;
}

std::string render_scalar_series(const std::vector<Rat>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ' ';
        out += rat_str(coeffs[i]);
    }
    return out;
}

} // namespace gzeta
