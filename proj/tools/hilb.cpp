#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "hilb/algebra_io.hpp"
#include "hilb/ring.hpp"

using namespace hilb;
using json = nlohmann::ordered_json;

namespace {

int weight_budget(const FrobeniusAlgebra& h) { return h.dim == 1 ? 4 : 3; }

void check_weight(const FrobeniusAlgebra& h, int n) {
    if (n < 0) throw input_error("weight must be nonnegative");
    if (n > weight_budget(h))
        throw input_error("weight " + std::to_string(n) + " exceeds the budget (" +
                          std::to_string(weight_budget(h)) + " for this algebra)");
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutStream(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw input_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& get() { return *os; }
};

std::string monomial_str(const FrobeniusAlgebra& h, const FockMonomial& mono) {
    if (mono.parts.empty()) return "vac";
    std::string s;
    for (const auto& p : mono.parts)
        s += "P(" + h.labels[p.color] + " x^" + std::to_string(p.m) + ")";
    return s;
}

void print_matrix(std::ostream& os, const Matrix<Rational>& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? "  " : "  ") << to_string(m(i, j));
        os << "\n";
    }
}

// ---- dims -------------------------------------------------------------------

int cmd_dims(const FrobeniusAlgebra& h, int nmax, const std::string& out) {
    if (nmax < 0 || nmax > 10) throw input_error("dims supports 0 <= n <= 10");
    OutStream o(out);
    for (int n = 0; n <= nmax; ++n) {
        FockBasis basis = FockBasis::build(h, n);
        if (mpz_class(basis.size()) != fock_dimension(h, n))
            throw internal_error("enumeration disagrees with the generating series");
        std::map<int, int> hist;
        for (const auto& mono : basis.monomials) ++hist[cohomological_degree(h, mono)];
        o.get() << "n=" << n << " dim=" << basis.size() << " poincare=";
        bool first = true;
        for (const auto& [d, c] : hist) {
            if (!first) o.get() << "+";
            o.get() << c << "q^" << d;
            first = false;
        }
        o.get() << "\n";
    }
    return 0;
}

// ---- lehn -------------------------------------------------------------------

int cmd_lehn(const FrobeniusAlgebra& h, int n, const std::string& out) {
    check_weight(h, n);
    OutStream o(out);
    FockBasis basis = FockBasis::build(h, n);
    o.get() << "basis of the weight-" << n << " space:\n";
    for (int i = 0; i < basis.size(); ++i)
        o.get() << "  [" << i << "] " << monomial_str(h, basis.monomials[i]) << "\n";
    o.get() << "matrix (K = canonical class):\n";
    print_matrix(o.get(), matrix_of<Rational>(h, lehn_op<Rational>(h), n));
    return 0;
}

// ---- dunkl-verify -----------------------------------------------------------

void dunkl_identity_suite(const FrobeniusAlgebra& h, int N, int degree, std::ostream& os) {
    DunklContext<Rational> ctx(h, N, unit_element<Rational>(h));
    dunkl_commutator_check(ctx, degree);
    os << "pairwise commutativity: ok\n";
    hecke_relation_check(ctx, degree);
    os << "hecke relations: ok\n";
    energy_sum_check(ctx, degree);
    os << "energy sum on symmetric states: ok\n";
    for (const auto& mono : enumerate_window(h, N, degree)) {
        TensorState<Rational> sym = symmetrize(h, N, TensorState<Rational>{{mono, Rational(1)}});
        if (is_symmetric(h, sym)) cascomp_square_check(ctx, sym);
    }
    os << "second-order identity on symmetric states: ok\n";
}

int cmd_dunkl_verify(const FrobeniusAlgebra& h, int N, int degree, const std::string& out) {
    if (N < 1 || N > 3) throw input_error("dunkl-verify supports 1 <= particles <= 3");
    if (degree < 0 || degree > 4) throw input_error("dunkl-verify supports degree <= 4");
    OutStream o(out);
    dunkl_identity_suite(h, N, degree, o.get());
    return 0;
}

// ---- chern ------------------------------------------------------------------

int cmd_chern(const FrobeniusAlgebra& h, int n, int i, const std::string& out) {
    check_weight(h, n);
    if (i < 0 || i > 2) throw input_error("chern supports 0 <= degree <= 2");
    OutStream o(out);
    AlgElement<Rational> kc = lift_element<Rational>(h.canonical);
    FockBasis basis = FockBasis::build(h, n);
    for (int c = 0; c < h.dim; ++c) {
        AlgElement<Rational> ec = zero_element<Rational>(h);
        ec[c] = Rational(1);
        BlockOp<Rational> d = chern_block<Rational>(h, kc, i, ec, n);
        if (!d.blocks[0].is_zero_matrix())
            throw verification_error("chern operator does not annihilate the vacuum");
        chern_lehn_commute_check<Rational>(h, kc, i, ec, n);
        o.get() << "ch_" << i << "(" << h.labels[c] << ") on the weight-" << n
                << " space (commutes with the cs-operator, vanishes on vac):\n";
        print_matrix(o.get(), d.blocks[n]);
    }
    return 0;
}

// ---- ring -------------------------------------------------------------------

json table_json(const FrobeniusAlgebra& h, const RingTable<Rational>& t, const std::string& route,
                bool both_agree) {
    json doc;
    doc["algebra"] = {{"name", h.name}, {"hash", h.content_hash()}};
    json kcoords = json::array();
    for (const auto& q : h.canonical) kcoords.push_back(to_string(q));
    doc["K"] = kcoords;
    doc["n"] = t.n;
    doc["route"] = route;
    doc["both_routes_agree"] = both_agree;
    json basis = json::array();
    for (const auto& mono : t.basis.monomials) {
        json m = json::array();
        for (const auto& p : mono.parts) m.push_back({p.m, p.color});
        basis.push_back(m);
    }
    doc["basis"] = basis;
    doc["degrees"] = t.degrees;
    doc["parities"] = t.parities;
    json unit = json::array();
    for (const auto& q : t.unit) unit.push_back(to_string(q));
    doc["unit"] = unit;
    json cs = json::array();
    const int dim = static_cast<int>(t.c.size());
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!is_zero(t.c[i][j][k])) cs.push_back({i, j, k, to_string(t.c[i][j][k])});
    doc["constants"] = cs;
    return doc;
}

MatrixSpan<Rational> chern_span(const FrobeniusAlgebra& h, int n) {
    int dim = FockBasis::build(h, n).size();
    return algebra_span(chern_route_ops<Rational>(h, lift_element<Rational>(h.canonical), 2, n),
                        dim);
}

MatrixSpan<Rational> dunkl_span(const FrobeniusAlgebra& h, int n) {
    int dim = FockBasis::build(h, n).size();
    DegenerationDirection dir = default_degeneration(h);
    FockDescent desc(h, n, n + 1);
    return algebra_span(spherical_route_ops(h, desc, dir), dim);
}

int cmd_ring(const FrobeniusAlgebra& h, int n, const std::string& route, const std::string& out) {
    check_weight(h, n);
    bool want_chern = route == "chern" || route == "both";
    bool want_dunkl = route == "dunkl" || route == "both";
    if (!want_chern && !want_dunkl) throw input_error("route must be chern, dunkl, or both");
    std::optional<MatrixSpan<Rational>> sa, sb;
    if (want_chern) sa = chern_span(h, n);
    if (want_dunkl) sb = dunkl_span(h, n);
    bool both_agree = false;
    if (sa && sb) {
        if (!spans_equal(*sa, *sb))
            throw verification_error("the two construction routes span different algebras");
        both_agree = true;
    }
    const MatrixSpan<Rational>& span = sa ? *sa : *sb;
    RingTable<Rational> t = structure_constants(h, span, n);
    check_ring_table(t);
    if (n == 1) check_weight_one_table(h, t);
    check_lehn_is_multiplication(h, span, t);
    if (sa && sb) {
        RingTable<Rational> t2 = structure_constants(h, *sb, n);
        if (!(t.c == t2.c))
            throw verification_error("the two construction routes give different tables");
    }
    OutStream o(out);
    o.get() << table_json(h, t, route, both_agree).dump(2) << "\n";
    return 0;
}

// ---- limit-check ------------------------------------------------------------

int cmd_limit_check(const FrobeniusAlgebra& h, int n, const std::string& out) {
    check_weight(h, n);
    OutStream o(out);
    DegenerationDirection d1 = default_degeneration(h);
    DegenerationDirection d2 = squared_degeneration(h);
    check_degeneration(h, d1);
    check_degeneration(h, d2);
    o.get() << "degeneration identities: ok\n";
    FockDescent desc(h, n, n + 1);
    auto ops1 = spherical_route_ops(h, desc, d1);
    auto ops2 = spherical_route_ops(h, desc, d2);
    for (size_t q = 0; q < ops1.size(); ++q)
        if (!(ops1[q] == ops2[q]))
            throw verification_error("degeneration directions give different limits");
    o.get() << "limits pole-free and direction-independent on the weight-" << n << " space ("
            << ops1.size() << " generators)\n";
    return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyItem {
    std::string name;
    std::function<void()> fn;
};

int cmd_verify(const std::string& algebra_arg, int jobs, const std::string& out) {
    std::vector<FrobeniusAlgebra> algebras;
    if (algebra_arg.empty()) {
        algebras.push_back(point_algebra(Rational(1)));
        algebras.push_back(plane_algebra());
        algebras.push_back(torus_algebra());
    } else {
        algebras.push_back(resolve_algebra(algebra_arg));
    }
    std::vector<VerifyItem> items;
    for (const auto& h : algebras) {
        items.push_back({h.name + ": dunkl identities", [&h] {
            for (int N = 2; N <= 3; ++N) {
                int degree = N == 2 ? 3 : 2;
                DunklContext<Rational> ctx(h, N, unit_element<Rational>(h));
                dunkl_commutator_check(ctx, degree);
                hecke_relation_check(ctx, degree);
                energy_sum_check(ctx, degree);
                for (const auto& mono : enumerate_window(h, N, degree)) {
                    TensorState<Rational> sym =
                        symmetrize(h, N, TensorState<Rational>{{mono, Rational(1)}});
                    if (is_symmetric(h, sym)) cascomp_square_check(ctx, sym);
                }
            }
        }});
        int nb = h.dim == 1 ? 3 : 2;
        items.push_back({h.name + ": spherical transport", [&h, nb] {
            for (int n = 1; n <= nb; ++n)
                cts_cross_check<Rational>(h, unit_element<Rational>(h), n, n + 1);
        }});
        items.push_back({h.name + ": chern operator properties", [&h] {
            AlgElement<Rational> kc = lift_element<Rational>(h.canonical);
            AlgElement<Rational> one = unit_element<Rational>(h);
            for (int i = 0; i <= 2; ++i) chern_lehn_commute_check<Rational>(h, kc, i, one, 3);
            chern_defining_check<Rational>(h, kc, 1, one, 2);
            chern_pairwise_check<Rational>(h, kc, 0, one, 1, one, 3);
        }});
        bool degenerable = true;
        try {
            default_degeneration(h);
        } catch (const input_error&) {
            degenerable = false;
        }
        if (degenerable) {
            items.push_back({h.name + ": degeneration limits", [&h] {
                DegenerationDirection d1 = default_degeneration(h);
                DegenerationDirection d2 = squared_degeneration(h);
                check_degeneration(h, d1);
                check_degeneration(h, d2);
                FockDescent desc(h, 2, 3);
                auto ops1 = spherical_route_ops(h, desc, d1);
                auto ops2 = spherical_route_ops(h, desc, d2);
                if (!(ops1 == ops2))
                    throw verification_error("degeneration directions disagree");
            }});
            items.push_back({h.name + ": two-route ring extraction", [&h] {
                auto sa = chern_span(h, 2);
                auto sb = dunkl_span(h, 2);
                if (!spans_equal(sa, sb)) throw verification_error("route spans differ");
                RingTable<Rational> t = structure_constants(h, sa, 2);
                check_ring_table(t);
                check_lehn_is_multiplication(h, sa, t);
            }});
        } else {
            items.push_back({h.name + ": ring extraction", [&h] {
                auto sa = chern_span(h, 2);
                RingTable<Rational> t = structure_constants(h, sa, 2);
                check_ring_table(t);
                check_lehn_is_multiplication(h, sa, t);
            }});
        }
        items.push_back({h.name + ": weight-1 ring equals the algebra", [&h] {
            auto sa = chern_span(h, 1);
            RingTable<Rational> t = structure_constants(h, sa, 1);
            check_ring_table(t);
            check_weight_one_table(h, t);
        }});
    }

    // run items in parallel, report in order
    std::vector<std::string> results(items.size());
    std::vector<int> status(items.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t q = next.fetch_add(1); q < items.size(); q = next.fetch_add(1)) {
            try {
                items[q].fn();
                results[q] = "PASS " + items[q].name;
            } catch (const verification_error& ex) {
                results[q] = "FAIL " + items[q].name + ": " + ex.what();
                status[q] = 1;
            } catch (const internal_error& ex) {
                results[q] = "FAIL " + items[q].name + ": internal: " + ex.what();
                status[q] = 3;
            } catch (const input_error& ex) {
                results[q] = "FAIL " + items[q].name + ": input: " + ex.what();
                status[q] = 2;
            }
        }
    };
    int width = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int q = 1; q < width; ++q) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    OutStream o(out);
    int rc = 0;
    for (size_t q = 0; q < items.size(); ++q) {
        o.get() << results[q] << "\n";
        rc = std::max(rc, status[q]);
    }
    o.get() << (rc == 0 ? "verification suite: all checks passed"
                        : "verification suite: FAILURES PRESENT")
            << "\n";
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fock-space operator calculus for Hilbert-scheme cohomology"};
    app.require_subcommand(1);

    std::string algebra = "point";
    std::string out;
    int n = 2, particles = 2, degree = 1, jobs = 1;
    std::string route = "chern";

    auto add_common = [&](CLI::App* sub, bool with_n) {
        sub->add_option("--algebra", algebra,
                        "builtin name (point[:t], plane, torus, tpoint[:t]) or JSON file");
        sub->add_option("--out", out, "write output to this file instead of stdout");
        if (with_n) sub->add_option("--n", n, "weight (number of points)");
    };

    auto* dims = app.add_subcommand("dims", "weight-space dimensions and degree counts");
    add_common(dims, true);
    n = 2;

    auto* lehn = app.add_subcommand("lehn", "matrix of the Calogero-Sutherland-type operator");
    add_common(lehn, true);

    auto* dv = app.add_subcommand("dunkl-verify", "Dunkl-operator identity checks");
    add_common(dv, false);
    dv->add_option("--particles", particles, "tensor window size");
    dv->add_option("--degree", degree, "total degree of the window")->default_val(3);

    auto* ch = app.add_subcommand("chern", "characteristic-class operators with property checks");
    add_common(ch, true);
    ch->add_option("--degree", degree, "characteristic-class degree i")->default_val(1);

    auto* ring = app.add_subcommand("ring", "extract cup-product structure constants");
    add_common(ring, true);
    ring->add_option("--route", route, "construction route: chern, dunkl, or both");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--algebra", algebra, "restrict to one algebra (default: all builtins)");
    verify->add_option("--out", out, "write the report to this file");
    verify->add_option("--jobs", jobs, "parallel workers");
    std::string verify_algebra; // empty means all
    verify->callback([&] { verify_algebra = verify->count("--algebra") ? algebra : ""; });

    auto* lim = app.add_subcommand("limit-check", "degeneration-direction independence");
    add_common(lim, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dims->parsed()) return cmd_dims(resolve_algebra(algebra), dims->count("--n") ? n : 10, out);
        if (lehn->parsed()) return cmd_lehn(resolve_algebra(algebra), n, out);
        if (dv->parsed()) return cmd_dunkl_verify(resolve_algebra(algebra), particles, degree, out);
        if (ch->parsed()) return cmd_chern(resolve_algebra(algebra), n, degree, out);
        if (ring->parsed()) return cmd_ring(resolve_algebra(algebra), n, route, out);
        if (verify->parsed()) return cmd_verify(verify_algebra, jobs, out);
        if (lim->parsed()) return cmd_limit_check(resolve_algebra(algebra), n, out);
    } catch (const input_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const verification_error& ex) {
        std::cerr << "verification failure: " << ex.what() << "\n";
        return 1;
    } catch (const internal_error& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    }
    return 0;
}
