#include "gzeta/job.hpp"

#include <ostream>
#include <set>

namespace gzeta {

using nlohmann::json;
using nlohmann::ordered_json;

const char* task_name(TaskKind t) {
    switch (t) {
        case TaskKind::Marks: return "marks";
        case TaskKind::LambdaSeries: return "lambda-series";
        case TaskKind::SymPower: return "sym-power";
        case TaskKind::Euler: return "euler";
        case TaskKind::ZetaLefschetz: return "zeta-lefschetz";
        case TaskKind::ZetaAcampo: return "zeta-acampo";
        case TaskKind::Character: return "character";
    }
    return "?";
}

namespace {

TaskKind task_from_name(const std::string& name) {
    for (TaskKind t : {TaskKind::Marks, TaskKind::LambdaSeries, TaskKind::SymPower, TaskKind::Euler,
                       TaskKind::ZetaLefschetz, TaskKind::ZetaAcampo, TaskKind::Character})
        if (name == task_name(t)) return t;
    throw ParseError("unknown task: " + name);
}

int require_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<int>();
}

long long require_int64(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<long long>();
}

Perm perm_from_json(const json& spec, int degree) {
    if (spec.is_string()) return parse_cycles(spec.get<std::string>(), degree);
    if (spec.is_array()) {
        Perm p;
        for (const auto& v : spec) p.push_back(require_int(v, "permutation image"));
        if (static_cast<int>(p.size()) != degree)
            throw ParseError("permutation image list must have length " + std::to_string(degree));
        return p;
    }
    throw ParseError("permutation must be a cycle string or an image array");
}

FiniteGroup group_from_json(const json& spec) {
    if (spec.contains("family")) {
        if (!spec["family"].is_string()) throw ParseError("group family must be a string");
        auto fam = family_from_name(spec["family"].get<std::string>());
        if (!fam) throw ParseError("unknown group family: " + spec["family"].get<std::string>());
        if (!spec.contains("n")) throw ParseError("group family needs n");
        int n = require_int(spec["n"], "group n");
        if (n < 1) throw ParseError("group n must be >= 1");
        return builtin_group(*fam, n);
    }
    if (spec.contains("degree")) {
        int degree = require_int(spec["degree"], "group degree");
        if (degree < 1) throw ParseError("group degree must be >= 1");
        std::vector<Perm> gens;
        if (spec.contains("generators")) {
            if (!spec["generators"].is_array()) throw ParseError("generators must be an array");
            for (const auto& g : spec["generators"]) gens.push_back(perm_from_json(g, degree));
        }
        auto g = build_group_from_permutations(degree, gens);
        if (spec.contains("label")) {
            if (!spec["label"].is_string()) throw ParseError("group label must be a string");
            g.set_label(spec["label"].get<std::string>());
        }
        return g;
    }
    throw ParseError("group needs either {family, n} or {degree, generators}");
}

Subgroup subgroup_from_json(const Ctx& ctx, const json& spec) {
    const auto& g = ctx->group();
    if (spec.is_string()) {
        if (spec.get<std::string>() == "G") {
            std::vector<int> all(g.order());
            for (int i = 0; i < g.order(); ++i) all[i] = i;
            return Subgroup{std::move(all)};
        }
        throw ParseError("subgroup must be \"G\" or an array of generators");
    }
    if (!spec.is_array()) throw ParseError("subgroup must be \"G\" or an array of generators");
    std::vector<int> gens;
    for (const auto& item : spec) {
        if (item.is_number_integer()) {
            int id = item.get<int>();
            if (id < 0 || id >= g.order())
                throw ValidationError("element id " + std::to_string(id) + " out of range");
            gens.push_back(id);
        } else if (item.is_string()) {
            Perm p = parse_cycles(item.get<std::string>(), g.degree());
            auto id = g.element_of_perm(p);
            if (!id)
                throw ValidationError("permutation " + item.get<std::string>() +
                                      " is not an element of the group");
            gens.push_back(*id);
        } else {
            throw ParseError("subgroup generator must be an element id or a cycle string");
        }
    }
    return subgroup_generated_by(g, gens);
}

int class_ref_from_json(const Ctx& ctx, const json& spec) {
    if (spec.is_number_integer()) {
        int h = spec.get<int>();
        if (h < 0 || h >= ctx->class_count())
            throw ValidationError("class index " + std::to_string(h) + " out of range");
        return h;
    }
    return ctx->class_of(subgroup_from_json(ctx, spec));
}

Rat rat_from_json(const json& num, const json* den) {
    auto big = [](const json& j, const std::string& what) -> mpz_class {
        if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
        if (j.is_string()) {
            try {
                return mpz_class(j.get<std::string>());
            } catch (const std::invalid_argument&) {
                throw ParseError(what + " is not a valid integer string");
            }
        }
        throw ParseError(what + " must be an integer or a decimal string");
    };
    mpz_class n = big(num, "numerator");
    mpz_class d = den ? big(*den, "denominator") : mpz_class(1);
    if (d == 0) throw ParseError("denominator must be nonzero");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

BurnsideElement element_from_json(const Ctx& ctx, const json& spec) {
    if (!spec.is_array()) throw ParseError("element must be an array of coefficient records");
    BurnsideElement out = BurnsideElement::zero(ctx);
    for (const auto& rec : spec) {
        if (!rec.is_object() || !rec.contains("class_index") || !rec.contains("numerator"))
            throw ParseError("coefficient record needs class_index and numerator");
        int h = require_int(rec["class_index"], "class_index");
        if (h < 0 || h >= ctx->class_count())
            throw ValidationError("class index " + std::to_string(h) + " out of range");
        const json* den = rec.contains("denominator") ? &rec["denominator"] : nullptr;
        out += rat_from_json(rec["numerator"], den) * BurnsideElement::basis(ctx, h);
    }
    return out;
}

GSetExplicit gset_from_json(const Ctx& ctx, const json& spec) {
    if (!spec.is_object()) throw ParseError("gset must be an object");
    if (spec.contains("coset")) return GSetExplicit::coset_space(ctx, subgroup_from_json(ctx, spec["coset"]));
    if (spec.contains("natural")) return GSetExplicit::natural(ctx);
    if (spec.contains("points")) {
        int points = require_int(spec["points"], "gset points");
        if (points < 0) throw ParseError("gset points must be >= 0");
        if (!spec.contains("action") || !spec["action"].is_array())
            throw ParseError("explicit gset needs an action array");
        const auto& rows = spec["action"];
        if (static_cast<int>(rows.size()) != ctx->group().order())
            throw ValidationError("action needs one row per group element");
        std::vector<int> act;
        act.reserve(static_cast<size_t>(ctx->group().order()) * points);
        for (const auto& row : rows) {
            if (!row.is_array() || static_cast<int>(row.size()) != points)
                throw ValidationError("action rows must list an image per point");
            for (const auto& v : row) act.push_back(require_int(v, "action image"));
        }
        GSetExplicit x(ctx, points, std::move(act));
        x.validate();
        return x;
    }
    throw ParseError("gset needs one of: coset, natural, points+action");
}

ordered_json element_to_json(const BurnsideElement& b) {
    ordered_json arr = ordered_json::array();
    for (int h = 0; h < b.context()->class_count(); ++h) {
        const Rat& q = b.coeff(h);
        if (q == 0) continue;
        ordered_json rec;
        rec["class_index"] = h;
        rec["numerator"] = q.get_num().get_str();
        rec["denominator"] = q.get_den().get_str();
        arr.push_back(std::move(rec));
    }
    return arr;
}

ordered_json series_to_json(const GSeries& s) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= s.order(); ++k) arr.push_back(element_to_json(s.coeff(k)));
    return arr;
}

ordered_json factors_to_json(const std::vector<ExponentTerm>& factors) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : factors) {
        ordered_json rec;
        rec["m"] = f.m;
        rec["exponent"] = element_to_json(f.exponent);
        arr.push_back(std::move(rec));
    }
    return arr;
}

ordered_json scalar_series_to_json(const std::vector<Rat>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : v) arr.push_back(rat_str(q));
    return arr;
}

std::string legend_text(const Ctx& ctx) {
    const auto& g = ctx->group();
    std::string out = "group " + group_name(*ctx) + " order " + std::to_string(g.order()) +
                      " degree " + std::to_string(g.degree()) + "\n";
    for (int h = 0; h < ctx->class_count(); ++h) {
        const auto& cls = ctx->classes().at(h);
        auto gens = generators_of(g, cls.representative);
        out += "class " + std::to_string(h) + ": " + class_name(*ctx, h) + " order " +
               std::to_string(cls.representative.order()) + " size " +
               std::to_string(cls.members.size()) + " gens [";
        for (size_t i = 0; i < gens.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(gens[i]);
        }
        out += "]";
        if (!gens.empty()) {
            out += " cycles [";
            for (size_t i = 0; i < gens.size(); ++i) {
                if (i) out += ',';
                out += cycle_string(g.perm_of(gens[i]));
            }
            out += "]";
        }
        out += "\n";
    }
    return out;
}

ordered_json legend_json(const Ctx& ctx) {
    const auto& g = ctx->group();
    ordered_json arr = ordered_json::array();
    for (int h = 0; h < ctx->class_count(); ++h) {
        const auto& cls = ctx->classes().at(h);
        auto gens = generators_of(g, cls.representative);
        ordered_json rec;
        rec["class_index"] = h;
        rec["name"] = class_name(*ctx, h);
        rec["order"] = cls.representative.order();
        rec["class_size"] = cls.members.size();
        rec["generators"] = gens;
        ordered_json cycles = ordered_json::array();
        for (int e : gens) cycles.push_back(cycle_string(g.perm_of(e)));
        rec["cycles"] = std::move(cycles);
        arr.push_back(std::move(rec));
    }
    return arr;
}

std::vector<ResolutionStratum> strata_from_json(const Ctx& ctx, const json& spec) {
    if (!spec.is_array()) throw ParseError("strata must be an array");
    std::vector<ResolutionStratum> out;
    for (const auto& rec : spec) {
        if (!rec.is_object() || !rec.contains("m") || !rec.contains("H") ||
            !rec.contains("Hhat") || !rec.contains("chi"))
            throw ParseError("stratum record needs m, H, Hhat, chi");
        ResolutionStratum s;
        s.m = require_int(rec["m"], "stratum m");
        s.isotropy = subgroup_from_json(ctx, rec["H"]);
        s.slice_kernel = subgroup_from_json(ctx, rec["Hhat"]);
        s.euler = require_int64(rec["chi"], "stratum chi");
        out.push_back(std::move(s));
    }
    return out;
}

std::string zeta_text(const std::vector<ExponentTerm>& factors, const GSeries& series,
                      const BurnsideElement& degree, const std::vector<Rat>& classical) {
    std::string out = "product: " + render_factors(factors) + "\n";
    out += render_series(series);
    out += "degree: " + render_element(degree) + "\n";
    out += "classical: " + render_scalar_series(classical) + "\n";
    return out;
}

ordered_json zeta_json(const std::vector<ExponentTerm>& factors, const GSeries& series,
                       const BurnsideElement& degree, const std::vector<Rat>& classical) {
    ordered_json res;
    res["factors"] = factors_to_json(factors);
    res["series"] = series_to_json(series);
    res["degree"] = element_to_json(degree);
    res["classical"] = scalar_series_to_json(classical);
    return res;
}

} // namespace

JobDocument parse_job(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("job document must be a JSON object");
    if (!doc.contains("task") || !doc["task"].is_string())
        throw ParseError("job needs a task string");
    if (!doc.contains("group") || !doc["group"].is_object())
        throw ParseError("job needs a group object");

    JobDocument job;
    job.doc = doc;
    job.task = task_from_name(doc["task"].get<std::string>());
    if (doc.contains("order")) {
        job.order = require_int(doc["order"], "order");
        if (job.order < 0) throw ParseError("order must be >= 0");
        if (job.order > kMaxTruncationOrder)
            throw SizeLimitError("order exceeds the hard cap of " +
                                 std::to_string(kMaxTruncationOrder));
    }
    if (doc.contains("strict")) {
        if (!doc["strict"].is_boolean()) throw ParseError("strict must be a boolean");
        job.strict = doc["strict"].get<bool>();
    }
    if (doc.contains("format")) {
        if (!doc["format"].is_string()) throw ParseError("format must be a string");
        std::string f = doc["format"].get<std::string>();
        if (f == "text")
            job.format = OutputFormat::Text;
        else if (f == "structured")
            job.format = OutputFormat::Structured;
        else
            throw ParseError("format must be \"text\" or \"structured\"");
    }
    return job;
}

RunResult run(const JobDocument& job, const JobOverrides& overrides) {
    int order = overrides.order.value_or(job.order);
    if (order < 0) throw ParseError("order must be >= 0");
    if (order > kMaxTruncationOrder)
        throw SizeLimitError("order exceeds the hard cap of " +
                             std::to_string(kMaxTruncationOrder));
    const bool strict = overrides.strict.value_or(job.strict);
    const OutputFormat format = overrides.format.value_or(job.format);

    Ctx ctx = BurnsideContext::make(group_from_json(job.doc["group"]));
    std::vector<std::string> warnings;
    std::string text_result;
    ordered_json result;

    switch (job.task) {
        case TaskKind::Marks: {
            const auto& marks = ctx->marks();
            ordered_json rows = ordered_json::array();
            for (int k = 0; k < marks.dim; ++k) {
                ordered_json row = ordered_json::array();
                for (int h = 0; h < marks.dim; ++h) {
                    if (h) text_result += ' ';
                    text_result += std::to_string(marks.at(k, h));
                    row.push_back(marks.at(k, h));
                }
                text_result += '\n';
                rows.push_back(std::move(row));
            }
            result["marks"] = std::move(rows);
            break;
        }
        case TaskKind::LambdaSeries: {
            if (!job.doc.contains("gset")) throw ParseError("lambda-series needs a gset");
            GSeries s = lambda_series(gset_from_json(ctx, job.doc["gset"]), order);
            text_result = render_series(s);
            result["series"] = series_to_json(s);
            break;
        }
        case TaskKind::SymPower: {
            if (!job.doc.contains("gset")) throw ParseError("sym-power needs a gset");
            if (!job.doc.contains("k")) throw ParseError("sym-power needs k");
            int k = require_int(job.doc["k"], "k");
            if (k < 0) throw ParseError("k must be >= 0");
            BurnsideElement e =
                gset_decompose(sym_power_explicit(gset_from_json(ctx, job.doc["gset"]), k));
            text_result = "S^" + std::to_string(k) + ": " + render_element(e) + "\n";
            result["k"] = k;
            result["element"] = element_to_json(e);
            break;
        }
        case TaskKind::Euler: {
            BurnsideElement value = BurnsideElement::zero(ctx);
            if (job.doc.contains("strata")) {
                if (!job.doc["strata"].is_array()) throw ParseError("strata must be an array");
                std::vector<IsotropyStratum> strata;
                for (const auto& rec : job.doc["strata"]) {
                    if (!rec.is_object() || !rec.contains("h") || !rec.contains("chi"))
                        throw ParseError("isotropy stratum needs h and chi");
                    strata.push_back(IsotropyStratum{class_ref_from_json(ctx, rec["h"]),
                                                     require_int64(rec["chi"], "chi")});
                }
                auto euler = euler_from_strata(ctx, strata);
                value = euler.value;
                if (euler.non_integral)
                    warnings.push_back("equivariant Euler characteristic has non-integral "
                                       "coefficients; the strata do not describe a G-space");
            } else if (job.doc.contains("cells")) {
                if (!job.doc["cells"].is_array()) throw ParseError("cells must be an array");
                std::vector<std::pair<int, BurnsideElement>> cells;
                for (const auto& rec : job.doc["cells"]) {
                    if (!rec.is_object() || !rec.contains("dim") || !rec.contains("cellset"))
                        throw ParseError("cell record needs dim and cellset");
                    cells.emplace_back(require_int(rec["dim"], "dim"),
                                       element_from_json(ctx, rec["cellset"]));
                }
                value = euler_from_cells(ctx, cells);
            } else {
                throw ParseError("euler task needs strata or cells");
            }
            text_result = "chi_G: " + render_element(value) + "\n";
            result["euler"] = element_to_json(value);
            break;
        }
        case TaskKind::ZetaLefschetz: {
            if (!job.doc.contains("lefschetz") || !job.doc["lefschetz"].is_array())
                throw ParseError("zeta-lefschetz needs a lefschetz array");
            LefschetzSequence l;
            int expect = 1;
            for (const auto& rec : job.doc["lefschetz"]) {
                if (!rec.is_object() || !rec.contains("m") || !rec.contains("value"))
                    throw ParseError("lefschetz record needs m and value");
                if (require_int(rec["m"], "m") != expect)
                    throw ValidationError("lefschetz sequence must be contiguous from m = 1");
                ++expect;
                l.values.push_back(element_from_json(ctx, rec["value"]));
            }
            if (l.values.empty()) throw ValidationError("lefschetz sequence is empty");
            ZetaProduct z = zeta_from_lefschetz(l, order);
            BurnsideElement degree = degree_of_product(ctx, z.factors);
            auto classical = forget_series(z.series);
            text_result = zeta_text(z.factors, z.series, degree, classical);
            result = zeta_json(z.factors, z.series, degree, classical);
            break;
        }
        case TaskKind::ZetaAcampo: {
            if (!job.doc.contains("strata")) throw ParseError("zeta-acampo needs strata");
            auto strata = strata_from_json(ctx, job.doc["strata"]);
            ZetaResult z = zeta_acampo(ctx, strata, order, strict);
            warnings.insert(warnings.end(), z.warnings.begin(), z.warnings.end());
            text_result = zeta_text(z.factors, z.series, z.degree, z.classical_zeta);
            result = zeta_json(z.factors, z.series, z.degree, z.classical_zeta);
            break;
        }
        case TaskKind::Character: {
            if (!job.doc.contains("element")) throw ParseError("character needs an element");
            BurnsideElement e = element_from_json(ctx, job.doc["element"]);
            auto values = to_permutation_character(e);
            const auto& classes = ctx->element_classes();
            ordered_json jclasses = ordered_json::array();
            for (size_t i = 0; i < classes.size(); ++i) {
                int rep = classes[i].front();
                std::string cyc = cycle_string(ctx->group().perm_of(rep));
                text_result += "eclass " + std::to_string(i) + " size " +
                               std::to_string(classes[i].size()) + " rep " + cyc + ": " +
                               rat_str(values[i]) + "\n";
                ordered_json rec;
                rec["index"] = i;
                rec["size"] = classes[i].size();
                rec["representative"] = rep;
                rec["cycles"] = cyc;
                jclasses.push_back(std::move(rec));
            }
            result["element_classes"] = std::move(jclasses);
            result["values"] = scalar_series_to_json(values);
            break;
        }
    }

    RunResult out;
    out.warnings = warnings;
    if (format == OutputFormat::Text) {
        out.output = "LEGEND\n" + legend_text(ctx) + "RESULT\n" + text_result;
        if (!warnings.empty()) {
            out.output += "WARNINGS\n";
            for (const auto& w : warnings) out.output += w + "\n";
        }
    } else {
        ordered_json top;
        top["schema"] = "gzeta.result/1";
        ordered_json grp;
        grp["label"] = group_name(*ctx);
        grp["order"] = ctx->group().order();
        grp["degree"] = ctx->group().degree();
        top["group"] = std::move(grp);
        top["task"] = task_name(job.task);
        top["legend"] = legend_json(ctx);
        top["result"] = std::move(result);
        top["warnings"] = warnings;
        out.output = top.dump(2) + "\n";
    }
    return out;
}

int run_to_streams(const std::string& text, const JobOverrides& overrides, std::ostream& out,
                   std::ostream& err) {
    try {
        RunResult r = run(parse_job(text), overrides);
        out << r.output;
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        for (const auto& d : e.diagnostics) err << "  " << d << "\n";
        return 3;
    } catch (const SizeLimitError& e) {
        err << "size limit exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gzeta
