#include "grl/fixtures.hpp"

#include <ostream>
#include <sstream>

#include "grl/families.hpp"

namespace grl::fixtures {

namespace {

Matrix mat2(const Field& f, Elt a, Elt b, Elt c, Elt d) {
    Matrix m(f, 2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

}  // namespace

GrlSpec example1_spec() {
    Field f9 = Field::make(3, 2, {1, 0, 1});  // w^2 = -1
    // alpha = {w, 2w, 1, w+2, 2w+2}, all multipliers 1
    GrlSpec s{f9, {3, 6, 1, 5, 8}, {1, 1, 1, 1, 1}, mat2(f9, 1, 1, 3, 2), 2};
    validate_grl_spec(s);
    return s;
}

GrlSpec example2_spec() {
    Field f9 = Field::make(3, 2, {1, 0, 1});
    // alpha = {w, 2w, 1, 2+w, 2+2w}, v = (1, 1, 1+w, 1, 1)
    GrlSpec s{f9, {3, 6, 1, 5, 8}, {1, 1, 4, 1, 1}, mat2(f9, 0, 3, 4, 6), 3};
    validate_grl_spec(s);
    return s;
}

GrlSpec example3_spec() {
    Field f9 = Field::make(3, 2, {1, 0, 1});
    Matrix a3(f9, 3, 3);
    // rows: (2+w, 1+w, 1), (2+2w, 1+2w, 2+w), (2w, 0, 1)
    a3(0, 0) = 5; a3(0, 1) = 4; a3(0, 2) = 1;
    a3(1, 0) = 8; a3(1, 1) = 7; a3(1, 2) = 5;
    a3(2, 0) = 6; a3(2, 1) = 0; a3(2, 2) = 1;
    GrlSpec s{f9, {3, 7, 2}, {1, 4, 3}, std::move(a3), 3};
    validate_grl_spec(s);
    return s;
}

GrlSpec example4_spec() {
    Field f25 = Field::make(5, 2, {2, 0, 1});  // w^2 = -2
    // three norm-fiber cosets: U6, w*U6, 2w*U6 in the published order
    std::vector<Elt> alpha = {1, 7, 22, 8, 23, 4, 5, 13, 12, 18, 17, 20, 10, 21, 24, 6, 9, 15};
    std::vector<Elt> v;
    for (int i = 0; i < 6; ++i) v.push_back(10);   // 2w
    for (int i = 0; i < 6; ++i) v.push_back(11);   // 1+2w
    for (int i = 0; i < 6; ++i) v.push_back(10);
    GrlSpec s{f25, std::move(alpha), std::move(v), mat2(f25, 1, 9, 6, 1), 4};
    validate_grl_spec(s);
    return s;
}

GrlSpec example5_spec() {
    Field f25 = Field::make(5, 2, {2, 0, 1});
    // alpha = F5* together with z*F5*, v repeats (1, z, 1+z, 2)
    GrlSpec s{f25, {1, 2, 3, 4, 5, 10, 15, 20}, {1, 5, 6, 2, 1, 5, 6, 2}, mat2(f25, 5, 21, 5, 6), 3};
    validate_grl_spec(s);
    return s;
}

TowerGF81 example6_tower() {
    Field f81 = Field::make(3, 4);
    std::vector<Elt> roots_of_minus_one;
    for (Elt x = 0; x < f81.q(); ++x)
        if (f81.mul(x, x) == f81.neg(1)) roots_of_minus_one.push_back(x);
    for (Elt r : roots_of_minus_one) {
        for (Elt w = 0; w < f81.q(); ++w) {
            if (f81.mul(w, w) != f81.add(r, 1)) continue;
            Elt g = f81.add(r, w);
            if (g != 0 && f81.order_of(g) == f81.q() - 1) return {f81, r, w, g};
        }
    }
    throw std::logic_error("no primitive g = r + w with r^2 = -1, w^2 = r + 1");
}

GrlSpec example6_spec() {
    auto t = example6_tower();
    const Field& f = t.f81;
    auto gp = [&](long long e) { return f.pow(t.g, e); };

    Elt xi = gp(8);  // order 10
    std::vector<Elt> alpha;
    for (int j = 0; j < 6; ++j) {
        Elt beta = gp(j);
        Elt cur = beta;
        for (int i = 0; i < 10; ++i) {
            alpha.push_back(cur);
            cur = f.mul(cur, xi);
        }
    }
    const long long ue[6] = {4, 2, 7, 2, 3, 3};
    std::vector<Elt> v;
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 10; ++i) v.push_back(gp(ue[j]));

    GrlSpec s{f, std::move(alpha), std::move(v), mat2(f, gp(5), gp(30), gp(31), gp(6)), 6};
    validate_grl_spec(s);
    return s;
}

std::vector<WorkedExample> worked_examples() {
    std::vector<WorkedExample> out;
    out.push_back({"example-1", "[7,2,5]_9", example1_spec(), false, true, 5, true});
    out.push_back({"example-2", "[7,3,4]_9", example2_spec(), true, true, 4, true});
    out.push_back({"example-3", "[6,3,3]_9", example3_spec(), true, true, 3, true});
    out.push_back({"example-4", "[20,4,16]_25", example4_spec(), true, true, 16, true});
    out.push_back({"example-5", "[10,3,7]_25", example5_spec(), true, true, 7, true});
    out.push_back({"example-6", "[62,6,56]_81", example6_spec(), true, true, 56, false});
    return out;
}

bool replay_worked_examples(std::ostream& out) {
    bool all_ok = true;
    for (const auto& ex : worked_examples()) {
        std::ostringstream why;
        bool ok = true;
        try {
            LinearCode code = build_grl_generator(ex.spec);
            bool hso = is_hermitian_self_orthogonal(code);
            if (hso != ex.hso_expected) {
                ok = false;
                why << " hermitian_so mismatch";
            }
            bool nmds;
            if (ex.spec.s() == 2) {
                nmds = nmds_criterion_s2(ex.spec).holds;
            } else {
                nmds = nmds_criterion_s3(ex.spec).holds;
            }
            if (nmds != ex.nmds_expected) {
                ok = false;
                why << " nmds mismatch";
            }
            if (ex.enumerate_d) {
                int d = min_distance_exact(code);
                if (d != ex.d_expected) {
                    ok = false;
                    why << " d=" << d << " expected " << ex.d_expected;
                }
            } else if (nmds) {
                // criterion certificate: d = n - k for an NMDS code
                int d = code.n() - code.k();
                if (d != ex.d_expected) {
                    ok = false;
                    why << " certified d=" << d << " expected " << ex.d_expected;
                }
            }
            if (ok) {
                out << "PASS " << ex.name << " " << ex.label << " hermitian_so=" << (hso ? "true" : "false")
                    << " nmds=" << (nmds ? "true" : "false")
                    << " d_evidence=" << (ex.enumerate_d ? "exact" : "certified") << "\n";
            }
        } catch (const std::exception& e) {
            ok = false;
            why << " exception: " << e.what();
        }
        if (!ok) {
            all_ok = false;
            out << "FAIL " << ex.name << " " << ex.label << why.str() << "\n";
        }
    }
    return all_ok;
}

}  // namespace grl::fixtures
