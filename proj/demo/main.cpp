// Tour of the library: arithmetic, gcd and factorization over GF(17^3),
// partial fractions, and ideal membership.

#include <iostream>

#include <rings/algebra/apart.hpp>
#include <rings/frontend/expr.hpp>
#include <rings/frontend/format.hpp>
#include <rings/galois.hpp>
#include <rings/groebner/ideal.hpp>
#include <rings/multivar/ring.hpp>
#include <rings/univar/ring.hpp>
#include <rings/zp.hpp>

using namespace rings;

int main() {
    GaloisField gf(17, 3, "t");
    MultiPolyRing<GaloisField> ring(gf, {"x", "y", "z"});
    std::cout << "ring: " << ring.describe() << "\n";

    auto a = parse(ring, "(t*x + y^2)^2 * (x + z)");
    auto b = parse(ring, "(t*x + y^2) * (x - z)^3");
    std::cout << "a = " << ring.format(a) << "\n";
    std::cout << "gcd(a, b) = " << ring.format(ring.gcd(a, b)) << "\n";

    auto f = ring.factor(ring.mul(a, b));
    std::cout << "a*b = "
              << format_factors(f, [&](const auto& p) { return ring.format(p); },
                                [&](const auto& u) { return gf.format(u); })
              << "\n";

    Rationals q;
    std::cout << "apart(1234213/2341352):";
    for (const auto& part : apart(q, parse(q, "1234213/2341352"))) std::cout << " " << q.format(part);
    std::cout << "\n";

    Frac<UniPolyRing<Zp64>> rf(UniPolyRing<Zp64>(Zp64(17), "x"));
    std::cout << "apart(1/(3 - 3x^2 - x^3 + x^5)) over Z17:";
    for (const auto& part : apart(rf, parse(rf, "1/(3 - 3*x^2 - x^3 + x^5)"))) std::cout << " " << rf.format(part);
    std::cout << "\n";

    MultiPolyRing<Rationals> qr(q, {"x", "y", "z"});
    Ideal ideal(qr, {parse(qr, "x^2 + y^2 + z^2 - 1"), parse(qr, "x - y"), parse(qr, "z - x*y")});
    std::cout << "I = " << ideal.format() << "\n";
    for (const auto& g : ideal.basis()) std::cout << "  " << qr.format(g) << "\n";
    auto probe = parse(qr, "(x - y)*z + (z - x*y)^2");
    std::cout << qr.format(probe) << (ideal.contains(probe) ? " is" : " is not") << " in I\n";
    std::cout << "x^3 reduces to " << qr.format(ideal.reduce(parse(qr, "x^3"))) << "\n";
}
