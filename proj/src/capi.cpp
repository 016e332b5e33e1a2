#include "ascert.h"

#include "core/construct.hpp"
#include "core/errors.hpp"
#include "core/scheme.hpp"
#include "core/sio.hpp"
#include "core/spectra.hpp"

#include <nlohmann/json.hpp>

#include <cstring>
#include <new>
#include <sstream>
#include <string>

struct ascert_scheme {
    ascert::Scheme scheme;
    ascert::Certification cert;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
ascert_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return ASCERT_OK;
    } catch (const ascert::ParseError& e) {
        g_last_error = e.what();
        return ASCERT_PARSE_ERROR;
    } catch (const ascert::CertificationError& e) {
        g_last_error = e.what();
        return ASCERT_CERTIFICATION_ERROR;
    } catch (const ascert::PreconditionError& e) {
        g_last_error = e.what();
        return ASCERT_PRECONDITION_ERROR;
    } catch (const ascert::UnsupportedError& e) {
        g_last_error = e.what();
        return ASCERT_UNSUPPORTED;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return ASCERT_NO_MEMORY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ASCERT_INVALID_ARGUMENT;
    }
}

ascert_status fail_invalid(const char* message) noexcept {
    g_last_error = message;
    return ASCERT_INVALID_ARGUMENT;
}

ascert_scheme* make_handle(ascert::Scheme&& s) {
    auto* h = new ascert_scheme{std::move(s), {}};
    try {
        h->cert = ascert::certify(h->scheme);
    } catch (...) {
        delete h;
        throw;
    }
    return h;
}

char* dup_text(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string join_int64(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

std::string format_quad_matrix(const ascert::QuadMatrix& m) {
    std::vector<std::string> cells;
    std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 0);
    cells.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            cells.push_back(m.at(r, c).str());
            width[static_cast<std::size_t>(c)] =
                std::max(width[static_cast<std::size_t>(c)], cells.back().size());
        }
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        os << " ";
        for (int c = 0; c < m.cols(); ++c) {
            const std::string& cell =
                cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(m.cols()) +
                      static_cast<std::size_t>(c)];
            os << ' ' << std::string(width[static_cast<std::size_t>(c)] - cell.size(), ' ')
               << cell;
        }
        os << '\n';
    }
    return os.str();
}

std::string verify_text(const ascert_scheme& h) {
    const auto& s = h.scheme;
    const int k = s.num_classes() + 1;
    std::ostringstream os;
    os << "order: " << s.n() << '\n';
    os << "class: " << s.num_classes() << '\n';
    os << "symmetric: " << (h.cert.symmetric ? "yes" : "no") << '\n';
    os << "commutative: " << (h.cert.commutative ? "yes" : "no") << '\n';
    os << "valencies: " << join_int64(s.valencies()) << '\n';
    os << "transpose-pairing:";
    for (int i = 0; i < k; ++i) os << ' ' << s.pairing(i);
    os << '\n';
    os << "intersection numbers, rows p[i][j][0..d]:" << '\n';
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            os << "p[" << i << "][" << j << "] =";
            for (int l = 0; l < k; ++l) os << ' ' << h.cert.tensor.at(i, j, l);
            os << '\n';
        }
    return os.str();
}

std::string verify_json(const ascert_scheme& h) {
    const auto& s = h.scheme;
    const int k = s.num_classes() + 1;
    nlohmann::json p = nlohmann::json::array();
    for (int i = 0; i < k; ++i) {
        nlohmann::json pi = nlohmann::json::array();
        for (int j = 0; j < k; ++j) {
            nlohmann::json pij = nlohmann::json::array();
            for (int l = 0; l < k; ++l) pij.push_back(h.cert.tensor.at(i, j, l));
            pi.push_back(std::move(pij));
        }
        p.push_back(std::move(pi));
    }
    nlohmann::json j{{"n", s.n()},
                     {"class", s.num_classes()},
                     {"symmetric", h.cert.symmetric},
                     {"commutative", h.cert.commutative},
                     {"valencies", s.valencies()},
                     {"pairing", s.pairings()},
                     {"p", std::move(p)}};
    return j.dump(2) + "\n";
}

ascert::EigenData eigen_of(const ascert_scheme& h) {
    if (!h.cert.commutative)
        throw ascert::PreconditionError("eigenmatrix computation requires a commutative scheme");
    auto b = ascert::intersection_matrices(h.scheme, h.cert.tensor);
    return ascert::eigen_from_intersection(b, h.scheme.valencies(), h.scheme.n());
}

std::string eigen_text(const ascert::EigenData& e) {
    std::ostringstream os;
    os << "n: " << e.n << '\n';
    os << "class: " << e.P.rows() - 1 << '\n';
    os << "disc: " << e.disc << "   (w^2 = " << e.disc << ")" << '\n';
    os << "valencies: " << join_int64(e.valencies) << '\n';
    os << "multiplicities: " << join_int64(e.multiplicities) << '\n';
    os << "P:" << '\n' << format_quad_matrix(e.P);
    os << "Q = n P^(-1):" << '\n' << format_quad_matrix(e.Q);
    return os.str();
}

std::string theorem_text(const ascert::DoublingCoverEquivalence& eq) {
    std::ostringstream os;
    os << "m: " << eq.m << '\n';
    os << "order: " << eq.order << '\n';
    os << "relation matrices equal after alignment: " << (eq.cells_equal ? "yes" : "no") << '\n';
    os << "intersection tensors equal: " << (eq.tensors_equal ? "yes" : "no") << '\n';
    os << (eq.pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string theorem_json(const ascert::DoublingCoverEquivalence& eq) {
    nlohmann::json j{{"m", eq.m},
                     {"order", eq.order},
                     {"cells_equal", eq.cells_equal},
                     {"tensors_equal", eq.tensors_equal},
                     {"pass", eq.pass()}};
    return j.dump(2) + "\n";
}

}  // namespace

extern "C" {

const char* ascert_status_str(ascert_status status) {
    switch (status) {
        case ASCERT_OK: return "ok";
        case ASCERT_INVALID_ARGUMENT: return "invalid-argument";
        case ASCERT_PARSE_ERROR: return "parse-error";
        case ASCERT_CERTIFICATION_ERROR: return "certification-error";
        case ASCERT_PRECONDITION_ERROR: return "precondition-error";
        case ASCERT_UNSUPPORTED: return "unsupported";
        case ASCERT_NO_MEMORY: return "no-memory";
    }
    return "unknown";
}

const char* ascert_last_error(void) { return g_last_error.c_str(); }

ascert_status ascert_paley_tournament(int64_t m, ascert_scheme** out) {
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] { *out = make_handle(ascert::paley_tournament(m)); });
}

ascert_status ascert_paley_graph(int64_t q, ascert_scheme** out) {
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] { *out = make_handle(ascert::paley_graph(q)); });
}

ascert_status ascert_scheme_from_text(const char* text, ascert_scheme** out) {
    if (!text) return fail_invalid("null input text");
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] {
        *out = make_handle(ascert::Scheme::from_relation_matrix(ascert::parse_scheme(text)));
    });
}

ascert_status ascert_scheme_to_text(const ascert_scheme* s, char** out_text) {
    if (!s) return fail_invalid("null scheme");
    if (!out_text) return fail_invalid("null output pointer");
    return guarded([&] { *out_text = dup_text(ascert::serialize_scheme(s->scheme)); });
}

void ascert_scheme_free(ascert_scheme* s) { delete s; }

void ascert_text_free(char* text) { delete[] text; }

int64_t ascert_scheme_order(const ascert_scheme* s) { return s ? s->scheme.n() : -1; }

int64_t ascert_scheme_num_classes(const ascert_scheme* s) {
    return s ? s->scheme.num_classes() : -1;
}

int ascert_scheme_is_symmetric(const ascert_scheme* s) {
    return s && s->cert.symmetric ? 1 : 0;
}

int ascert_scheme_is_commutative(const ascert_scheme* s) {
    return s && s->cert.commutative ? 1 : 0;
}

int64_t ascert_scheme_valency(const ascert_scheme* s, int64_t i) {
    if (!s || i < 0 || i > s->scheme.num_classes()) return -1;
    return s->scheme.valency(static_cast<int>(i));
}

int64_t ascert_scheme_intersection_number(const ascert_scheme* s, int64_t i, int64_t j,
                                          int64_t l) {
    if (!s) return -1;
    const int64_t d = s->scheme.num_classes();
    if (i < 0 || j < 0 || l < 0 || i > d || j > d || l > d) return -1;
    return s->cert.tensor.at(static_cast<int>(i), static_cast<int>(j), static_cast<int>(l));
}

ascert_status ascert_extended_double_cover(const ascert_scheme* s, ascert_scheme** out) {
    if (!s) return fail_invalid("null scheme");
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] { *out = make_handle(ascert::extended_double_cover(s->scheme)); });
}

ascert_status ascert_doubling(const ascert_scheme* s, ascert_scheme** out) {
    if (!s) return fail_invalid("null scheme");
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] { *out = make_handle(ascert::doubling(s->scheme)); });
}

ascert_status ascert_taylor_extension(const ascert_scheme* s, ascert_scheme** out) {
    if (!s) return fail_invalid("null scheme");
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] { *out = make_handle(ascert::taylor_extension(s->scheme)); });
}

ascert_status ascert_reverse(const ascert_scheme* s, ascert_scheme** out) {
    if (!s) return fail_invalid("null scheme");
    if (!out) return fail_invalid("null output pointer");
    return guarded([&] { *out = make_handle(ascert::reverse(s->scheme)); });
}

ascert_status ascert_verify_report(const ascert_scheme* s, int as_json, char** out_text) {
    if (!s) return fail_invalid("null scheme");
    if (!out_text) return fail_invalid("null output pointer");
    return guarded([&] { *out_text = dup_text(as_json ? verify_json(*s) : verify_text(*s)); });
}

ascert_status ascert_eigen_report(const ascert_scheme* s, int as_json, char** out_text) {
    if (!s) return fail_invalid("null scheme");
    if (!out_text) return fail_invalid("null output pointer");
    return guarded([&] {
        ascert::EigenData e = eigen_of(*s);
        *out_text =
            dup_text(as_json ? ascert::serialize_eigen_report(e) : eigen_text(e));
    });
}

ascert_status ascert_hadamard_text(const ascert_scheme* s, char** out_text) {
    if (!s) return fail_invalid("null scheme");
    if (!out_text) return fail_invalid("null output pointer");
    return guarded([&] {
        *out_text = dup_text(
            ascert::serialize_hadamard(ascert::skew_hadamard_from_tournament(s->scheme)));
    });
}

ascert_status ascert_check_theorem(int64_t m, int as_json, int* out_pass, char** out_text) {
    if (!out_pass) return fail_invalid("null output pointer");
    if (!out_text) return fail_invalid("null output pointer");
    return guarded([&] {
        ascert::DoublingCoverEquivalence eq = ascert::check_doubling_cover_equivalence(m);
        *out_pass = eq.pass() ? 1 : 0;
        *out_text = dup_text(as_json ? theorem_json(eq) : theorem_text(eq));
    });
}

}  // extern "C"
