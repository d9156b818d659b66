#include "autdec/codes.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace autdec {

namespace {

BinaryMatrix pick_logicals(const BinaryMatrix& kernel, const BinaryMatrix& stabilizers,
                           std::size_t k) {
    IncrementalBasis span;
    for (std::size_t r = 0; r < stabilizers.rows(); ++r) span.insert(stabilizers.row(r));
    std::vector<BinaryVector> chosen;
    for (std::size_t r = 0; r < kernel.rows() && chosen.size() < k; ++r) {
        BinaryVector reduced;
        if (span.insert(kernel.row(r), &reduced)) chosen.push_back(std::move(reduced));
    }
    if (chosen.size() != k) throw std::logic_error("logical_operators: rank bookkeeping failed");
    BinaryMatrix out(k, kernel.cols());
    for (std::size_t r = 0; r < k; ++r) out.set_row(r, chosen[r]);
    return out;
}

unsigned apply_gl4(const BinaryMatrix& m, unsigned v) {
    unsigned w = 0;
    for (unsigned i = 0; i < 4; ++i)
        if ((v >> i) & 1)
            for (unsigned j = 0; j < 4; ++j)
                if (m.get(j, i)) w ^= 1u << j;
    return w;
}

void add_monomial(BinaryMatrix& mat, std::size_t l, std::size_t m, unsigned a, unsigned b) {
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mat.flip(i * m + j, ((i + a) % l) * m + (j + b) % m);
}

}  // namespace

std::pair<BinaryMatrix, BinaryMatrix> logical_operators(const BinaryMatrix& hx,
                                                        const BinaryMatrix& hz) {
    const std::size_t n = hx.cols();
    const std::size_t k = n - rank(hx) - rank(hz);
    BinaryMatrix lx = pick_logicals(kernel_basis(hz), hx, k);
    BinaryMatrix lz = pick_logicals(kernel_basis(hx), hz, k);
    return {lx, lz};
}

CssCode make_css(std::string name, BinaryMatrix hx, BinaryMatrix hz) {
    if (hx.cols() != hz.cols()) throw std::invalid_argument("make_css: column count mismatch");
    if (!mul(hx, hz.transpose()).is_zero())
        throw std::invalid_argument("make_css: hx and hz rows do not commute");

    CssCode code;
    code.name = std::move(name);
    code.n = hx.cols();
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    code.k = code.n - rank(code.hx) - rank(code.hz);
    std::tie(code.lx, code.lz) = logical_operators(code.hx, code.hz);
    if (rank(mul(code.lx, code.lz.transpose())) != code.k)
        throw std::logic_error("make_css: degenerate logical pairing");
    return code;
}

CssCode build_qrm15() {
    BinaryMatrix hx(4, 15);
    for (std::size_t j = 0; j < 15; ++j) {
        const unsigned v = unsigned(j + 1);
        for (unsigned i = 0; i < 4; ++i)
            if ((v >> i) & 1) hx.set(i, j, true);
    }
    BinaryMatrix hz(10, 15);
    for (unsigned i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 15; ++j)
            if (hx.get(i, j)) hz.set(i, j, true);
    std::size_t r = 4;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = i + 1; j < 4; ++j, ++r)
            for (std::size_t c = 0; c < 15; ++c)
                if (hx.get(i, c) && hx.get(j, c)) hz.set(r, c, true);
    return make_css("qrm15", std::move(hx), std::move(hz));
}

CssCode build_bb(std::size_t l, std::size_t m,
                 const std::vector<std::pair<unsigned, unsigned>>& a_exps,
                 const std::vector<std::pair<unsigned, unsigned>>& b_exps) {
    if (l < 1 || m < 1) throw std::invalid_argument("build_bb: l and m must be positive");
    if (a_exps.empty() || b_exps.empty())
        throw std::invalid_argument("build_bb: exponent lists must be nonempty");

    const std::size_t lm = l * m;
    BinaryMatrix a(lm, lm), b(lm, lm);
    for (auto [pa, pb] : a_exps) add_monomial(a, l, m, pa % l, pb % m);
    for (auto [pa, pb] : b_exps) add_monomial(b, l, m, pa % l, pb % m);

    BinaryMatrix hx = a.hstack(b);
    BinaryMatrix hz = b.transpose().hstack(a.transpose());
    return make_css("bb" + std::to_string(2 * lm), std::move(hx), std::move(hz));
}

std::size_t min_logical_weight(const CssCode& code) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const BinaryMatrix* checks[2] = {&code.hx, &code.hz};
    const BinaryMatrix* stabs[2] = {&code.hz, &code.hx};
    for (int side = 0; side < 2; ++side) {
        BinaryMatrix ker = kernel_basis(*checks[side]);
        if (ker.rows() > 24)
            throw std::invalid_argument("min_logical_weight: kernel too large for exhaustive search");
        const RrefResult stab_rr = rref(*stabs[side]);
        BinaryVector v(code.n);
        // Gray-code walk: one basis-row toggle per step covers every combination.
        const std::uint32_t total = std::uint32_t(1) << ker.rows();
        for (std::uint32_t i = 1; i < total; ++i) {
            v ^= ker.row(std::countr_zero(i));
            if (!in_rowspace(stab_rr, v)) best = std::min(best, v.popcount());
        }
    }
    return best;
}

Permutation qrm_code_automorphism(const BinaryMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw std::invalid_argument("qrm_code_automorphism: matrix must be 4x4");
    if (rank(m) != 4) throw std::invalid_argument("qrm_code_automorphism: matrix is singular");
    std::vector<std::uint32_t> image(15);
    for (unsigned v = 1; v <= 15; ++v) image[v - 1] = apply_gl4(m, v) - 1;
    return Permutation(std::move(image));
}

std::vector<Permutation> bb_shift_generators(std::size_t l, std::size_t m) {
    const std::size_t lm = l * m;
    std::vector<std::uint32_t> x_img(2 * lm), y_img(2 * lm);
    for (std::size_t block = 0; block < 2; ++block)
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t c = block * lm + i * m + j;
                x_img[c] = std::uint32_t(block * lm + ((i + 1) % l) * m + j);
                y_img[c] = std::uint32_t(block * lm + i * m + (j + 1) % m);
            }
    return {Permutation(std::move(x_img)), Permutation(std::move(y_img))};
}

std::vector<BbSpec> parse_code_manifest(const std::string& json_text) {
    std::vector<BbSpec> specs;
    try {
        const auto doc = nlohmann::json::parse(json_text);
        for (const auto& e : doc) {
            BbSpec s;
            s.name = e.at("name").get<std::string>();
            s.l = e.at("l").get<std::size_t>();
            s.m = e.at("m").get<std::size_t>();
            for (const auto& p : e.at("a_exps"))
                s.a_exps.emplace_back(p.at(0).get<unsigned>(), p.at(1).get<unsigned>());
            for (const auto& p : e.at("b_exps"))
                s.b_exps.emplace_back(p.at(0).get<unsigned>(), p.at(1).get<unsigned>());
            s.expect_n = e.at("expect_n").get<std::size_t>();
            s.expect_k = e.at("expect_k").get<std::size_t>();
            specs.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw ManifestParseError(std::string("code manifest: ") + ex.what());
    }
    return specs;
}

CssCode build_from_spec(const BbSpec& spec) {
    CssCode code = build_bb(spec.l, spec.m, spec.a_exps, spec.b_exps);
    code.name = spec.name;
    if (code.n != spec.expect_n || code.k != spec.expect_k)
        throw std::invalid_argument("manifest entry " + spec.name + ": computed [[" +
                                    std::to_string(code.n) + "," + std::to_string(code.k) +
                                    "]] does not match expected [[" + std::to_string(spec.expect_n) +
                                    "," + std::to_string(spec.expect_k) + "]]");
    return code;
}

const std::string& builtin_code_manifest() {
    static const std::string manifest = R"json([
  {"name": "bb72",  "l": 6,  "m": 6, "a_exps": [[3,0],[0,1],[0,2]], "b_exps": [[0,3],[1,0],[2,0]], "expect_n": 72,  "expect_k": 12},
  {"name": "bb90",  "l": 15, "m": 3, "a_exps": [[9,0],[0,1],[0,2]], "b_exps": [[0,0],[2,0],[7,0]], "expect_n": 90,  "expect_k": 8},
  {"name": "bb108", "l": 9,  "m": 6, "a_exps": [[3,0],[0,1],[0,2]], "b_exps": [[0,3],[1,0],[2,0]], "expect_n": 108, "expect_k": 8},
  {"name": "bb144", "l": 12, "m": 6, "a_exps": [[3,0],[0,1],[0,2]], "b_exps": [[0,3],[1,0],[2,0]], "expect_n": 144, "expect_k": 12}
]
)json";
    return manifest;
}

}  // namespace autdec
