#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoclass/isoclass.hpp"

namespace isoclass::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, internal = 1, usage = 2, unsupported = 3, domain = 4 };

inline constexpr std::int64_t max_theta_precision = 100000;
inline constexpr std::int64_t max_orbit_precision = 5000;

inline json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return arith::to_string(z);
}

inline json row_json(const ClassificationRow& row)
{
    json j;
    j["type"] = ihs::to_string(row.type);
    j["p"] = row.p;
    j["r"] = row.r;
    j["a"] = row.a;
    j["div"] = row.div ? json(*row.div) : json(nullptr);
    j["exists"] = row.exists;
    switch (row.orbits.kind) {
    case OrbitInfo::Kind::none: j["orbits"] = nullptr; break;
    case OrbitInfo::Kind::count: j["orbits"] = row.orbits.count; break;
    case OrbitInfo::Kind::unknown: j["orbits"] = "unknown"; break;
    }
    j["ambiguous"] = row.verdict.lattice_orbit_ambiguous;
    j["steinitz"] = integer_json(row.verdict.steinitz_factor);
    return j;
}

namespace detail {

inline std::string csv_cell(const json& v)
{
    std::string s;
    if (v.is_null())
        return s;
    if (v.is_string())
        s = v.get<std::string>();
    else
        s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

inline void csv_line(std::ostream& out, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << cells[i];
    out << "\n";
}

} // namespace detail

/// Objects become one row, arrays of objects a table with the keys of the
/// first row as header, arrays of arrays headerless rows.
inline void write_csv(std::ostream& out, const json& payload)
{
    auto object_rows = [&](const std::vector<json>& rows) {
        if (rows.empty())
            return;
        std::vector<std::string> header;
        for (const auto& item : rows.front().items())
            header.push_back(item.key());
        detail::csv_line(out, header);
        for (const auto& row : rows) {
            std::vector<std::string> cells;
            for (const auto& key : header)
                cells.push_back(detail::csv_cell(row.contains(key) ? row.at(key) : json(nullptr)));
            detail::csv_line(out, cells);
        }
    };
    if (payload.is_object()) {
        object_rows({payload});
    } else if (payload.is_array() && !payload.empty() && payload.front().is_object()) {
        object_rows(payload.get<std::vector<json>>());
    } else if (payload.is_array()) {
        for (const auto& row : payload) {
            std::vector<std::string> cells;
            if (row.is_array())
                for (const auto& c : row)
                    cells.push_back(detail::csv_cell(c));
            else
                cells.push_back(detail::csv_cell(row));
            detail::csv_line(out, cells);
        }
    } else {
        detail::csv_line(out, {detail::csv_cell(payload)});
    }
}

inline IntMatrix parse_gram(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw argument_error(std::string("--gram is not valid JSON: ") + e.what());
    }
    if (!j.is_array())
        throw argument_error("--gram must be a JSON array of rows");
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array())
            throw argument_error("--gram must be a JSON array of rows");
        IntVector r;
        for (const auto& c : row) {
            if (!c.is_number_integer())
                throw argument_error("--gram entries must be integers");
            r.push_back(c.get<std::int64_t>());
        }
        m.push_back(r);
    }
    return m;
}

inline json coefficient_pairs(const std::vector<std::int64_t>& values, std::int64_t first)
{
    json out = json::array();
    for (std::int64_t k = first; k < static_cast<std::int64_t>(values.size()); ++k)
        out.push_back(json::array({k, values[static_cast<std::size_t>(k)]}));
    return out;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Existence and classification of odd prime order isometries of p-elementary lattices", "isoclass"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::function<json()> action;

    // genus exists <symbol>
    auto* genus = app.add_subcommand("genus", "Genus symbol queries");
    genus->require_subcommand(1);
    std::string symbol;
    auto* genus_exists = genus->add_subcommand("exists", "Nonemptiness of a p-elementary genus");
    genus_exists->add_option("symbol", symbol, "Genus symbol, e.g. II_(2,2)5^-1")->required();
    genus_exists->callback([&] {
        action = [&] {
            const GenusSymbol g = GenusSymbol::parse(symbol);
            return json{{"genus", g.to_string()}, {"exists", discforms::genus_exists(g)}};
        };
    });

    // unimodular exists
    auto* unimod = app.add_subcommand("unimodular", "Isometries of unimodular lattices");
    unimod->require_subcommand(1);
    std::string parity = "even";
    std::vector<int> sig, coinv;
    std::int64_t p = 0;
    int n = 0;
    auto* unimod_exists = unimod->add_subcommand("exists", "Existence of an order-p isometry with given invariants");
    unimod_exists->add_option("--parity", parity)->required()->check(CLI::IsMember({"even", "odd"}));
    unimod_exists->add_option("--sig", sig, "l+,l-")->required()->delimiter(',')->expected(2);
    unimod_exists->add_option("--p", p)->required();
    unimod_exists->add_option("--s", coinv, "s+,s-")->required()->delimiter(',')->expected(2);
    unimod_exists->add_option("--n", n)->required();
    unimod_exists->callback([&] {
        action = [&] {
            const IsometryInvariants inv{p, parity == "even" ? Parity::even : Parity::odd, sig[0], sig[1], coinv[0],
                                         coinv[1], n};
            return json{{"parity", parity}, {"sig", sig}, {"p", p}, {"s", coinv}, {"n", n},
                        {"exists", unimodular::isometry_exists(inv)}};
        };
    });

    // k3 classify | exists
    auto* k3 = app.add_subcommand("k3", "Non-symplectic automorphisms of K3 surfaces");
    k3->require_subcommand(1);
    int r = 0, a = 0;
    auto* k3_classify = k3->add_subcommand("classify", "All (r, a) for a prime");
    k3_classify->add_option("--p", p)->required();
    k3_classify->callback([&] {
        action = [&] {
            if (!arith::is_odd_prime(p))
                throw argument_error("--p must be an odd prime");
            json rows = json::array();
            for (int rr = 1; rr <= 21; ++rr)
                for (int aa = 0; aa <= rr; ++aa)
                    if (unimodular::k3_exists(p, rr, aa))
                        rows.push_back(json{{"p", p}, {"r", rr}, {"a", aa}});
            return rows;
        };
    });
    auto* k3_exists = k3->add_subcommand("exists", "Existence for one triple");
    k3_exists->add_option("--p", p)->required();
    k3_exists->add_option("--r", r)->required();
    k3_exists->add_option("--a", a)->required();
    k3_exists->callback([&] {
        action = [&] { return json{{"p", p}, {"r", r}, {"a", a}, {"exists", unimodular::k3_exists(p, r, a)}}; };
    });

    // hminus
    auto* hminus = app.add_subcommand("hminus", "Relative class number of Q(zeta_p)");
    hminus->add_option("--p", p)->required();
    hminus->callback([&] {
        action = [&] { return json{{"p", p}, {"hminus", integer_json(classnumber::relative_class_number(p))}}; };
    });

    // vector exists | orbits
    auto* vec = app.add_subcommand("vector", "Primitive vectors of given square and divisibility");
    vec->require_subcommand(1);
    std::int64_t k = 0, div = 1;
    std::string genus_text;
    auto query = [&] { return EmbeddingQuery{GenusSymbol::parse(genus_text), k, div}; };
    for (const char* name : {"exists", "orbits"}) {
        auto* sub = vec->add_subcommand(name, name == std::string("exists") ? "Existence" : "Number of orbits");
        sub->add_option("--genus", genus_text)->required();
        sub->add_option("--k", k)->required();
        sub->add_option("--div", div)->required();
    }
    vec->get_subcommand("exists")->callback([&] {
        action = [&] {
            const auto q = query();
            return json{{"genus", q.genus.to_string()}, {"k", k}, {"div", div},
                        {"exists", to_string(embeddings::vector_exists(q))}};
        };
    });
    vec->get_subcommand("orbits")->callback([&] {
        action = [&] {
            const auto q = query();
            const auto report = embeddings::vector_orbits(q);
            return json{{"genus", q.genus.to_string()},
                        {"k", k},
                        {"div", div},
                        {"exists", to_string(report.exists)},
                        {"orbit_count", report.orbit_count ? json(*report.orbit_count) : json("unknown")},
                        {"special_case", report.special_case},
                        {"l1", report.l1_set},
                        {"l0", report.l0_set}};
        };
    });

    // a2 embeds
    auto* a2 = app.add_subcommand("a2", "Embeddings of A2(-1)");
    a2->require_subcommand(1);
    int l_minus = 0, eps = 1;
    auto* a2_embeds = a2->add_subcommand("embeds", "Primitive embedding into II_(3,l-)p^{eps n}");
    a2_embeds->add_option("--lminus", l_minus)->required();
    a2_embeds->add_option("--p", p)->required();
    a2_embeds->add_option("--eps", eps)->required()->check(CLI::IsMember({-1, 1}));
    a2_embeds->add_option("--n", n)->required();
    a2_embeds->add_option("--div", div)->required();
    a2_embeds->callback([&] {
        action = [&] {
            return json{{"lminus", l_minus}, {"p", p},     {"eps", eps},
                        {"n", n},            {"div", div}, {"embeds", embeddings::a2_embeds(l_minus, p, eps, n, div)}};
        };
    });

    // theta
    auto* th = app.add_subcommand("theta", "Theta series and orbit counts of the rank-2 invariant lattices");
    std::string lattice_id, orbit_group;
    std::int64_t prec = 0;
    bool primitive = false;
    th->add_option("--lattice", lattice_id)->required()->check(CLI::IsMember({"A2neg", "K7", "F23a", "F23b"}));
    th->add_option("--prec", prec)->required();
    auto* prim_flag = th->add_flag("--primitive", primitive, "Primitive counts r(k)");
    th->add_option("--orbits", orbit_group, "Orbit counts b(k) under O or SO")
        ->check(CLI::IsMember({"O", "SO"}))
        ->excludes(prim_flag);
    th->callback([&] {
        action = [&] {
            const auto id = theta::parse_lattice_id(lattice_id);
            if (prec < 1)
                throw argument_error("--prec must be at least 1");
            if (prec > max_theta_precision)
                throw unsupported_error("--prec above " + std::to_string(max_theta_precision) + " is not supported");
            if (!orbit_group.empty()) {
                if (prec > max_orbit_precision)
                    throw unsupported_error("--orbits with --prec above " + std::to_string(max_orbit_precision)
                                            + " is not supported");
                const auto series = theta::orbit_series(id, orbit_group == "O" ? GroupKind::O : GroupKind::SO, prec);
                std::vector<std::int64_t> values{0};
                values.insert(values.end(), series.counts.begin(), series.counts.end());
                return coefficient_pairs(values, 1);
            }
            const auto coeffs = theta::whole_coefficients(theta::theta_series(id, prec), prec);
            if (primitive)
                return coefficient_pairs(theta::primitive_counts(coeffs), 1);
            return coefficient_pairs(coeffs, 0);
        };
    });

    // ihs classify | ambiguous | induced
    auto* ihs_cmd = app.add_subcommand("ihs", "Known deformation types of IHS manifolds");
    ihs_cmd->require_subcommand(1);
    std::string type_name;
    std::int64_t manifold_n = 0, n_max = 0;
    std::int64_t ambiguous_div = 0;
    const auto type_check = CLI::IsMember({"K3", "K3n", "Kumn", "OG6", "OG10"});
    auto* ihs_classify = ihs_cmd->add_subcommand("classify", "Rows (r, a, div) for a prime");
    ihs_classify->add_option("--type", type_name)->required()->check(type_check);
    ihs_classify->add_option("--p", p)->required();
    auto* n_opt = ihs_classify->add_option("--n", manifold_n, "Manifold index");
    ihs_classify->callback([&] {
        action = [&] {
            std::optional<std::int64_t> index;
            if (n_opt->count() > 0)
                index = manifold_n;
            json rows = json::array();
            for (const auto& row : ihs::classify(ihs::parse_kind(type_name), p, index))
                rows.push_back(row_json(row));
            return rows;
        };
    });
    auto* ihs_ambiguous = ihs_cmd->add_subcommand("ambiguous", "Manifold indices with ambiguous actions");
    ihs_ambiguous->add_option("--type", type_name)->required()->check(CLI::IsMember({"K3n", "Kumn"}));
    ihs_ambiguous->add_option("--p", p)->required();
    ihs_ambiguous->add_option("--r", r)->required();
    ihs_ambiguous->add_option("--a", a)->required();
    auto* div_opt = ihs_ambiguous->add_option("--div", ambiguous_div);
    ihs_ambiguous->add_option("--nmax", n_max)->required();
    ihs_ambiguous->callback([&] {
        action = [&] {
            std::optional<std::int64_t> d;
            if (div_opt->count() > 0)
                d = ambiguous_div;
            const auto ns = ihs::ambiguous_n(ihs::parse_kind(type_name), p, r, a, d, n_max);
            return json{{"type", type_name}, {"p", p},         {"r", r}, {"a", a},
                        {"div", d ? json(*d) : json(nullptr)}, {"nmax", n_max}, {"n", ns}};
        };
    });
    auto* ihs_induced = ihs_cmd->add_subcommand("induced", "Realizability by induced automorphisms");
    ihs_induced->add_option("--type", type_name)->required()->check(CLI::IsMember({"K3n", "Kumn"}));
    ihs_induced->add_option("--p", p)->required();
    ihs_induced->add_option("--r", r)->required();
    ihs_induced->add_option("--a", a)->required();
    ihs_induced->callback([&] {
        action = [&] {
            return json{{"type", type_name}, {"p", p}, {"r", r}, {"a", a},
                        {"induced", ihs::induced_realizable(ihs::parse_kind(type_name), p, r, a)}};
        };
    });

    // oracle orbits
    auto* oracle = app.add_subcommand("oracle", "Brute-force lattice computations");
    oracle->require_subcommand(1);
    std::string gram_text, group_name;
    std::int64_t norm = 0;
    bool all_vectors = false;
    auto* oracle_orbits = oracle->add_subcommand("orbits", "Orbits of vectors of given norm in a definite lattice");
    oracle_orbits->add_option("--gram", gram_text, "Gram matrix as JSON rows")->required();
    oracle_orbits->add_option("--norm", norm)->required();
    oracle_orbits->add_option("--group", group_name)->required()->check(CLI::IsMember({"O", "SO"}));
    oracle_orbits->add_flag("--all", all_vectors, "Include imprimitive vectors");
    oracle_orbits->callback([&] {
        action = [&] {
            const GramLattice lattice(parse_gram(gram_text));
            const auto group = latgeom::group_of(lattice, group_name == "O" ? GroupKind::O : GroupKind::SO);
            json rows = json::array();
            for (const auto& o : latgeom::orbit_decomposition(lattice, group, norm, !all_vectors))
                rows.push_back(json{{"representative", o.representative},
                                    {"size", o.size},
                                    {"norm", o.norm},
                                    {"divisibility", o.divisibility}});
            return rows;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return usage;
    }

    try {
        const json payload = action();
        if (format == "csv")
            write_csv(out, payload);
        else
            out << payload.dump() << "\n";
        return ok;
    } catch (const unsupported_error& e) {
        err << "isoclass: unsupported: " << e.what() << "\n";
        return unsupported;
    } catch (const argument_error& e) {
        err << "isoclass: error: " << e.what() << "\n";
        return domain;
    } catch (const std::exception& e) {
        err << "isoclass: internal error: " << e.what() << "\n";
        return internal;
    }
}

} // namespace isoclass::cli
