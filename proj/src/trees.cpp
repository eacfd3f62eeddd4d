#include "sturmkit/trees.hpp"

#include <json.hpp>

#include "sturmkit/grammar.hpp"
#include "sturmkit/solver.hpp"

namespace sturmkit {

namespace {

void validate_address(const NodeAddress& addr) {
    for (char c : addr)
        if (c != '0' && c != '1') throw DomainError("address bits must be 0 or 1");
}

Mat2 kepler_matrix(int bit) {
    return bit == 0 ? Mat2{1, 0, 1, 1} : Mat2{0, 1, 1, 1};
}

Mat2 phi_incidence(int bit) {
    return bit == 0 ? Mat2{1, 1, 0, 1} : Mat2{1, 1, 1, 0};
}

} // namespace

TreeFraction kepler_value(const NodeAddress& addr) {
    validate_address(addr);
    TreeFraction f{1, 2};
    for (char c : addr) {
        BigInt sum = f.p + f.q;
        if (c == '1') f.p = f.q;
        f.q = sum;
    }
    return f;
}

std::vector<TreeFraction> kepler_level(int n, int depth_cap) {
    if (n < 0) throw DomainError("level must be non-negative");
    if (n > depth_cap) throw ResourceError("level exceeds the depth cap");
    std::vector<TreeFraction> level{TreeFraction{1, 2}};
    for (int step = 0; step < n; ++step) {
        std::vector<TreeFraction> next;
        next.reserve(level.size() * 2);
        for (const TreeFraction& f : level) {
            next.push_back({f.p, f.p + f.q});
            next.push_back({f.q, f.p + f.q});
        }
        level = std::move(next);
    }
    return level;
}

NodeAddress locate_fraction(const TreeFraction& f) {
    if (f.p <= 0 || f.q <= 0 || f.p >= f.q) throw DomainError("fraction must lie in (0,1)");
    if (big_gcd(f.p, f.q) != 1) throw DomainError("fraction must be reduced");
    BigInt a = f.p, b = f.q;
    NodeAddress addr;
    while (!(a == 1 && b == 2)) {
        if (2 * a < b) {
            // child 0 of a/(b-a)
            addr.push_back('0');
            b -= a;
        } else {
            // child 1 of (b-a)/a
            addr.push_back('1');
            BigInt t = b - a;
            b = a;
            a = t;
        }
    }
    return {addr.rbegin(), addr.rend()};
}

BinaryMorphism morphism_at(const NodeAddress& addr) {
    validate_address(addr);
    BinaryMorphism m = morphisms::identity();
    for (char c : addr) m = compose(c == '0' ? morphisms::phi0() : morphisms::phi1(), m);
    return m;
}

Mat2 matrix_at(const NodeAddress& addr, MatrixFamily family) {
    validate_address(addr);
    Mat2 m = Mat2::identity();
    for (char c : addr) {
        int bit = c - '0';
        m = (family == MatrixFamily::K ? kepler_matrix(bit) : phi_incidence(bit)) * m;
    }
    return m;
}

BinaryMorphism tree38_morphism_at(const NodeAddress& addr) {
    validate_address(addr);
    BinaryMorphism m = morphisms::identity();
    for (char c : addr) m = compose(morphisms::psi(c == '0' ? 3 : 8), m);
    return m;
}

std::optional<QuadraticNumber> sturm_number_at(const NodeAddress& addr) {
    validate_address(addr);
    if (addr.find('1') == std::string::npos) return std::nullopt; // left edge 0^n
    // The generator word of phi_{i_n} ... phi_{i_1} reads the address
    // back to front.
    PsiWord word;
    word.reserve(addr.size());
    for (auto it = addr.rbegin(); it != addr.rend(); ++it)
        word.push_back(*it == '0' ? 3 : 1);
    auto [alpha, rho] = solve_parameters(word_map(word));
    if (!(rho == alpha)) throw InternalError("homogeneous tree node solved with rho != alpha");
    return alpha;
}

namespace {

std::string node_label(TreeKind kind, const NodeAddress& addr) {
    switch (kind) {
        case TreeKind::Kepler: {
            TreeFraction f = kepler_value(addr);
            return f.p.str() + "/" + f.q.str();
        }
        case TreeKind::Phi:
            return format_morphism(morphism_at(addr));
        case TreeKind::M38:
            return format_morphism(tree38_morphism_at(addr));
        case TreeKind::MatrixK:
        case TreeKind::MatrixM: {
            Mat2 m = matrix_at(addr, kind == TreeKind::MatrixK ? MatrixFamily::K : MatrixFamily::M);
            return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
        }
        case TreeKind::Sturm: {
            auto alpha = sturm_number_at(addr);
            return alpha ? format_quadratic(*alpha) : "none";
        }
    }
    throw DomainError("unknown tree kind");
}

// Addresses of levels 0..depth in breadth-first, within-level address order.
std::vector<NodeAddress> breadth_first_addresses(int depth) {
    std::vector<NodeAddress> all{""};
    std::vector<NodeAddress> level{""};
    for (int n = 0; n < depth; ++n) {
        std::vector<NodeAddress> next;
        next.reserve(level.size() * 2);
        for (const NodeAddress& a : level) {
            next.push_back(a + "0");
            next.push_back(a + "1");
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

std::string dot_id(const NodeAddress& addr) { return addr.empty() ? "L" : addr; }

} // namespace

std::string export_tree(TreeKind kind, int depth, TreeFormat format, int depth_cap) {
    if (depth < 0) throw DomainError("depth must be non-negative");
    if (depth > depth_cap) throw ResourceError("depth exceeds the depth cap");

    std::vector<NodeAddress> addresses = breadth_first_addresses(depth);
    switch (format) {
        case TreeFormat::Json: {
            nlohmann::ordered_json out;
            for (const NodeAddress& a : addresses) out[a] = node_label(kind, a);
            return out.dump();
        }
        case TreeFormat::Dot: {
            std::string out = "digraph tree {\n";
            for (const NodeAddress& a : addresses)
                out += "  \"" + dot_id(a) + "\" [label=\"" + node_label(kind, a) + "\"];\n";
            for (const NodeAddress& a : addresses)
                if (!a.empty())
                    out += "  \"" + dot_id(a.substr(0, a.size() - 1)) + "\" -> \"" + a + "\";\n";
            out += "}\n";
            return out;
        }
        case TreeFormat::Ascii: {
            std::string out;
            auto emit = [&](auto&& self, const NodeAddress& a) -> void {
                out.append(2 * a.size(), ' ');
                out += dot_id(a) + ": " + node_label(kind, a) + "\n";
                if (static_cast<int>(a.size()) < depth) {
                    self(self, a + "0");
                    self(self, a + "1");
                }
            };
            emit(emit, "");
            return out;
        }
    }
    throw DomainError("unknown tree format");
}

} // namespace sturmkit
