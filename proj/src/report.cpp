/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The osrkit authors
 */

#include "osr/report.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "osr/error.hpp"
#include "osr/ideals.hpp"
#include "osr/radical.hpp"
#include "osr/spectrum.hpp"

namespace osr {

using Json = nlohmann::ordered_json;

bool CheckReport::all_pass() const
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = {
        "idl-quantale-axioms",
        "idl-universality",
        "generated-ideal-oracle",
        "product-of-generated",
        "radical-equals-semiprime",
        "rad-universality",
        "coherence",
        "dlat-reflection",
        "maximal-implies-prime",
        "degeneracy-equivalence",
        "prime-element-correspondence",
        "pt-rad-homeomorphic-spec",
        "rad-iso-opens-spec",
        "spec-sober",
    };
    return names;
}

namespace {

using Witness = std::optional<std::string>;

/// Exhaustive below this many elements, sampled above it.
constexpr std::size_t exhaustive_subsets = 10;
constexpr std::size_t exhaustive_pairs = 5;
constexpr std::size_t samples = 200;
constexpr std::uint64_t sample_seed = 0x6f7372;

std::vector<Subset> sample_subsets(std::size_t n, std::size_t limit, std::size_t count, std::mt19937_64& rng)
{
    std::vector<Subset> out;
    if (n <= limit) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            out.push_back(Subset::from_bits(bits));
        }
        return out;
    }
    const std::uint64_t mask = Subset::full(n).bits();
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(Subset::from_bits(rng() & mask));
    }
    return out;
}

class Runner {
public:
    explicit Runner(CheckReport& report) : report_(report) {}

    /// Verification failures become the witness; anything else propagates.
    void verdict(const std::string& name, const std::function<Witness()>& body)
    {
        const auto start = std::chrono::steady_clock::now();
        Witness w;
        try {
            w = body();
        } catch (const Error& e) {
            if (!is_verification_failure(e.kind())) {
                throw;
            }
            w = e.what();
        }
        record(name, start);
        report_.verdicts.push_back({name, !w.has_value(), w.value_or("")});
    }

    template <class F>
    auto phase(const std::string& name, F&& body)
    {
        const auto start = std::chrono::steady_clock::now();
        auto result = body();
        record(name, start);
        return result;
    }

private:
    void record(const std::string& name, std::chrono::steady_clock::time_point start)
    {
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        report_.timings.emplace_back(name, elapsed.count());
    }

    CheckReport& report_;
};

template <class T>
struct Computed {
    std::optional<T> value;
    std::string failure;
};

template <class T, class F>
Computed<T> attempt(F&& body)
{
    Computed<T> c;
    try {
        c.value.emplace(body());
    } catch (const Error& e) {
        if (!is_verification_failure(e.kind())) {
            throw;
        }
        c.failure = e.what();
    }
    return c;
}

} // namespace

CheckReport run_checks(const SemiringPtr& ap)
{
    const Semiring& a = *ap;
    CheckReport report;
    report.name = a.name();
    report.counts.elements = a.size();
    Runner run(report);

    const auto idl_c = run.phase("ideals", [&] { return attempt<IdealQuantale>([&] { return IdealQuantale::compute(ap); }); });
    Computed<RadicalFrame> rad_c;
    if (idl_c.value) {
        rad_c = run.phase("radicals", [&] { return attempt<RadicalFrame>([&] { return RadicalFrame::compute(*idl_c.value); }); });
    } else {
        rad_c.failure = idl_c.failure;
    }

    auto with_idl = [&](const std::function<Witness(const IdealQuantale&)>& body) {
        return [&, body]() -> Witness {
            if (!idl_c.value) {
                return idl_c.failure;
            }
            return body(*idl_c.value);
        };
    };
    auto with_rad = [&](const std::function<Witness(const RadicalFrame&)>& body) {
        return [&, body]() -> Witness {
            if (!rad_c.value) {
                return rad_c.failure;
            }
            return body(*rad_c.value);
        };
    };

    if (idl_c.value) {
        const IdealQuantale& idl = *idl_c.value;
        report.counts.ideals = idl.size();
        report.counts.primes = enumerate_primes(idl).size();
        report.counts.maximal = enumerate_maximal(idl).size();
    }
    if (rad_c.value) {
        report.counts.radicals = rad_c.value->size();
    }

    run.verdict("idl-quantale-axioms", with_idl([](const IdealQuantale& idl) { return idl.verify(); }));

    run.verdict("idl-universality", with_idl([](const IdealQuantale& idl) -> Witness {
                    const auto z4 = IdealQuantale::compute(build_zmod(4));
                    for (const auto& q : {chain_frame_quantale(2), chain_frame_quantale(3), z4.lattice()}) {
                        check_idl_universal(idl, q);
                    }
                    return std::nullopt;
                }));

    std::mt19937_64 rng(sample_seed);
    run.verdict("generated-ideal-oracle", [&]() -> Witness {
        for (Subset s : sample_subsets(a.size(), exhaustive_subsets, samples, rng)) {
            const Subset fixed = ideal_generated(a, s).members;
            const Subset formula = ideal_generated_by_formula(a, s);
            if (fixed != formula) {
                return "S=" + a.subset_label(s) + ": closure " + a.subset_label(fixed) + ", formula " +
                       a.subset_label(formula);
            }
        }
        return std::nullopt;
    });

    run.verdict("product-of-generated", [&]() -> Witness {
        const auto left = sample_subsets(a.size(), exhaustive_pairs, samples, rng);
        const auto right = sample_subsets(a.size(), exhaustive_pairs, samples, rng);
        for (std::size_t i = 0; i < left.size(); ++i) {
            const std::size_t first = a.size() <= exhaustive_pairs ? 0 : i;
            const std::size_t last = a.size() <= exhaustive_pairs ? right.size() : i + 1;
            for (std::size_t j = first; j < last; ++j) {
                if (!check_product_generators(a, left[i], right[j])) {
                    return "S=" + a.subset_label(left[i]) + ", T=" + a.subset_label(right[j]);
                }
            }
        }
        return std::nullopt;
    });

    run.verdict("radical-equals-semiprime", with_rad([&](const RadicalFrame& rad) -> Witness {
                    const IdealQuantale& idl = rad.ideals();
                    for (Index i = 0; i < idl.size(); ++i) {
                        const bool radical = is_radical(a, idl.ideal(i));
                        if (radical != is_semiprime(idl.lattice(), i)) {
                            return "ideal " + idl.label(i) + (radical ? " is radical but not semiprime"
                                                                      : " is semiprime but not radical");
                        }
                    }
                    const auto s = semiprime_elements(idl.lattice());
                    for (Index k = 0; k < rad.size(); ++k) {
                        if (s.members.size() != rad.size() || s.members[k] != rad.ideal_index(k)) {
                            return std::string("S(Idl A) differs from Rad(A)");
                        }
                    }
                    return std::nullopt;
                }));

    run.verdict("rad-universality", with_rad([](const RadicalFrame& rad) -> Witness {
                    for (const auto& f : {chain_lattice(2), chain_lattice(3), boolean_lattice(2)}) {
                        check_rad_universal(rad, f);
                    }
                    return std::nullopt;
                }));

    run.verdict("coherence", with_rad([](const RadicalFrame& rad) -> Witness {
                    check_coherence(rad);
                    return std::nullopt;
                }));

    run.verdict("dlat-reflection", with_rad([](const RadicalFrame& rad) -> Witness {
                    dlat_reflection(rad);
                    return std::nullopt;
                }));

    run.verdict("maximal-implies-prime", with_idl([](const IdealQuantale& idl) -> Witness {
                    check_maximal_implies_prime(idl);
                    return std::nullopt;
                }));

    run.verdict("degeneracy-equivalence", with_idl([](const IdealQuantale& idl) -> Witness {
                    check_degeneracy_equivalence(idl);
                    return std::nullopt;
                }));

    run.verdict("prime-element-correspondence", with_idl([](const IdealQuantale& idl) -> Witness {
                    check_prime_element_correspondence(idl);
                    return std::nullopt;
                }));

    run.verdict("pt-rad-homeomorphic-spec", with_rad([](const RadicalFrame& rad) -> Witness {
                    check_pt_rad_equals_spec(rad);
                    return std::nullopt;
                }));

    run.verdict("rad-iso-opens-spec", with_rad([](const RadicalFrame& rad) -> Witness {
                    check_rad_is_opens_of_spec(rad);
                    return std::nullopt;
                }));

    run.verdict("spec-sober", with_idl([](const IdealQuantale& idl) -> Witness {
                    const SoberReport s = check_sober(spec_space(idl));
                    if (!s.sober) {
                        return s.witness;
                    }
                    return std::nullopt;
                }));

    return report;
}

std::string render_json(const CheckReport& report, bool with_timings)
{
    Json j;
    j["name"] = report.name;
    j["counts"] = {
        {"elements", report.counts.elements}, {"ideals", report.counts.ideals},
        {"radicals", report.counts.radicals}, {"primes", report.counts.primes},
        {"maximal", report.counts.maximal},
    };
    j["verdicts"] = Json::array();
    for (const auto& v : report.verdicts) {
        Json entry = {{"check", v.check}, {"pass", v.pass}};
        if (!v.pass) {
            entry["witness"] = v.witness;
        }
        j["verdicts"].push_back(std::move(entry));
    }
    if (with_timings) {
        Json t = Json::object();
        for (const auto& [phase, ms] : report.timings) {
            t[phase] = ms;
        }
        j["timings"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

std::string render_text(const CheckReport& report, bool with_timings)
{
    std::ostringstream out;
    const auto& c = report.counts;
    out << report.name << ": |A|=" << c.elements << " |Idl|=" << c.ideals << " |Rad|=" << c.radicals
        << " |Spec|=" << c.primes << " |Max|=" << c.maximal << "\n";
    for (const auto& v : report.verdicts) {
        out << (v.pass ? "pass " : "FAIL ") << v.check;
        if (!v.pass) {
            out << ": " << v.witness;
        }
        out << "\n";
    }
    if (with_timings) {
        for (const auto& [phase, ms] : report.timings) {
            out << "time " << phase << " " << ms << " ms\n";
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
        }
        out += ch;
    }
    return out + "\"";
}

std::string dot(const std::string& graph, const std::vector<std::string>& nodes,
                const std::vector<std::pair<Index, Index>>& edges)
{
    std::string out = "digraph " + graph + " {\n";
    for (const auto& n : nodes) {
        out += "  " + quoted(n) + ";\n";
    }
    for (const auto& [from, to] : edges) {
        out += "  " + quoted(nodes[from]) + " -> " + quoted(nodes[to]) + ";\n";
    }
    return out + "}\n";
}

std::vector<std::pair<Index, Index>> cover_pairs(const Relation& le)
{
    std::vector<std::pair<Index, Index>> out;
    const std::size_t n = le.size();
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            if (x == y || !le(x, y) || le(y, x)) {
                continue;
            }
            bool cover = true;
            for (Index z = 0; z < n && cover; ++z) {
                cover = z == x || z == y || !(le(x, z) && le(z, y));
            }
            if (cover) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

std::vector<std::string> labels_of(const IdealQuantale& idl, const std::vector<Index>& indices)
{
    std::vector<std::string> out;
    for (Index i : indices) {
        out.push_back(idl.label(i));
    }
    return out;
}

Json space_json(const FiniteTopSpace& x)
{
    Json opens = Json::array();
    for (Subset u : x.opens) {
        opens.push_back(point_set_label(u, x.points));
    }
    return {{"points", x.points}, {"opens", opens}};
}

std::string space_text(const FiniteTopSpace& x)
{
    std::string out = "points:";
    for (const auto& p : x.points) {
        out += " " + p;
    }
    out += "\nopens:";
    for (Subset u : x.opens) {
        out += " " + point_set_label(u, x.points);
    }
    return out + "\n";
}

std::string lines(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items) {
        out += s + "\n";
    }
    return out;
}

} // namespace

std::string emit_dot(DotTarget target, const SemiringPtr& a)
{
    const auto idl = IdealQuantale::compute(a);
    switch (target) {
    case DotTarget::Idl: {
        std::vector<std::string> nodes;
        for (Index i = 0; i < idl.size(); ++i) {
            nodes.push_back(idl.label(i));
        }
        return dot("idl", nodes, idl.lattice().covers());
    }
    case DotTarget::Rad: {
        const auto rad = RadicalFrame::compute(idl);
        std::vector<std::string> nodes;
        for (Index i = 0; i < rad.size(); ++i) {
            nodes.push_back(rad.label(i));
        }
        return dot("rad", nodes, rad.lattice().covers());
    }
    case DotTarget::Spec: {
        const auto spec = spec_space(idl);
        return dot("spec", spec.points, cover_pairs(specialization_order(spec)));
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown DOT target");
}

std::string render_command(Command command, const SemiringPtr& ap, bool json)
{
    const Semiring& a = *ap;
    if (command == Command::Validate) {
        if (json) {
            return Json{{"name", a.name()}, {"elements", a.labels()}, {"valid", true}}.dump(2) + "\n";
        }
        return a.name() + ": valid ordered semiring on " + std::to_string(a.size()) + " elements\n";
    }

    const auto idl = IdealQuantale::compute(ap);
    const auto primes = enumerate_primes(idl);
    const auto maximal = enumerate_maximal(idl);
    auto contains = [](const std::vector<Index>& v, Index i) { return std::find(v.begin(), v.end(), i) != v.end(); };

    switch (command) {
    case Command::Ideals: {
        if (json) {
            Json list = Json::array();
            for (Index i = 0; i < idl.size(); ++i) {
                list.push_back({{"ideal", idl.label(i)},
                                {"radical", is_radical(a, idl.ideal(i))},
                                {"prime", contains(primes, i)},
                                {"maximal", contains(maximal, i)}});
            }
            return Json{{"name", a.name()}, {"ideals", list}}.dump(2) + "\n";
        }
        std::vector<std::string> out;
        for (Index i = 0; i < idl.size(); ++i) {
            out.push_back(idl.label(i));
        }
        return lines(out);
    }
    case Command::Radicals: {
        const auto rad = RadicalFrame::compute(idl);
        std::vector<std::string> members;
        for (Index i = 0; i < rad.size(); ++i) {
            members.push_back(rad.label(i));
        }
        Json roots = Json::object();
        std::vector<std::string> root_lines;
        for (Index x = 0; x < a.size(); ++x) {
            const std::string r = rad.label(rad.radical_principal(x));
            roots[a.label(x)] = r;
            root_lines.push_back("sqrt<" + a.label(x) + "> = " + r);
        }
        if (json) {
            return Json{{"name", a.name()}, {"radicals", members}, {"sqrt", roots}}.dump(2) + "\n";
        }
        return lines(members) + lines(root_lines);
    }
    case Command::Primes: {
        if (json) {
            return Json{{"name", a.name()}, {"primes", labels_of(idl, primes)}, {"maximal", labels_of(idl, maximal)}}
                       .dump(2) +
                   "\n";
        }
        std::vector<std::string> out;
        for (Index p : primes) {
            out.push_back(idl.label(p) + (contains(maximal, p) ? " maximal" : ""));
        }
        if (out.empty()) {
            out.push_back("no prime ideals");
        }
        return lines(out);
    }
    case Command::Spec: {
        const auto spec = spec_space(idl);
        if (json) {
            Json basis = Json::object();
            for (const auto& [name, u] : spec.basis) {
                basis[name] = point_set_label(u, spec.points);
            }
            Json j = space_json(spec);
            j["basis"] = basis;
            return Json{{"name", a.name()}, {"spec", j}}.dump(2) + "\n";
        }
        std::string out = space_text(spec);
        for (const auto& [name, u] : spec.basis) {
            out += name + " = " + point_set_label(u, spec.points) + "\n";
        }
        return out;
    }
    case Command::Reflect: {
        const auto rad = RadicalFrame::compute(idl);
        const auto r = dlat_reflection(rad);
        std::vector<std::string> elements;
        for (Index i = 0; i < r.lattice.size(); ++i) {
            elements.push_back(r.lattice.label(i));
        }
        Json map = Json::object();
        std::vector<std::string> map_lines;
        for (Index x = 0; x < a.size(); ++x) {
            map[a.label(x)] = r.lattice.label(r.universal_map[x]);
            map_lines.push_back(a.label(x) + " -> " + r.lattice.label(r.universal_map[x]));
        }
        if (json) {
            return Json{{"name", a.name()}, {"lattice", elements}, {"map", map}, {"test_lattices", r.test_lattices}}
                       .dump(2) +
                   "\n";
        }
        return lines(elements) + lines(map_lines);
    }
    case Command::Pt: {
        const auto rad = RadicalFrame::compute(idl);
        const auto pt = pt_of_frame(rad.lattice());
        if (json) {
            return Json{{"name", a.name()}, {"pt", space_json(pt)}}.dump(2) + "\n";
        }
        return space_text(pt);
    }
    case Command::Validate:
        break;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown command");
}

} // namespace osr
