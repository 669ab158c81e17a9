#include "tracecat/tracecat.h"

#include <gtest/gtest.h>

#include <memory>
#include <string>
#include <thread>

namespace {

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Sym = std::unique_ptr<tc_sym, Deleter<tc_sym, tc_sym_free>>;
using Nh = std::unique_ptr<tc_nh, Deleter<tc_nh, tc_nh_free>>;
using Cartan = std::unique_ptr<tc_cartan, Deleter<tc_cartan, tc_cartan_free>>;
using Center = std::unique_ptr<tc_center, Deleter<tc_center, tc_center_free>>;
using Vector = std::unique_ptr<tc_vector, Deleter<tc_vector, tc_vector_free>>;
using Grass = std::unique_ptr<tc_grass, Deleter<tc_grass, tc_grass_free>>;

// Takes ownership of a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  tc_string_free(s);
  return out;
}

Sym sym(const char* text) {
  tc_sym* out = nullptr;
  EXPECT_EQ(tc_sym_parse(text, nullptr, &out), TC_OK) << tc_last_error();
  return Sym(out);
}

Cartan cartan(int n) {
  tc_cartan* out = nullptr;
  EXPECT_EQ(tc_cartan_new(n, &out), TC_OK);
  return Cartan(out);
}

}  // namespace

TEST(CApi, SymFormatsInEveryBasis) {
  const Sym p2 = sym("p[2]");
  char* text = nullptr;
  ASSERT_EQ(tc_sym_format(p2.get(), "h", TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "2 h[2] - h[1,1]\n");
  ASSERT_EQ(tc_sym_format(p2.get(), "h", TC_JSON, &text), TC_OK);
  EXPECT_EQ(take(text),
            R"({"basis":"h","terms":[{"partition":[2],"coeff":"2"},{"partition":[1,1],"coeff":"-1"}]})"
            "\n");
  ASSERT_EQ(tc_sym_format(p2.get(), "p", TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "p[2]\n");
}

TEST(CApi, SymArithmeticAndJsonRoundTrip) {
  const Sym e1 = sym("e[1]"), e2 = sym("e[2]"), h2 = sym("h[2]"), minus = sym("-1");
  tc_sym *sq = nullptr, *neg = nullptr, *diff = nullptr;
  ASSERT_EQ(tc_sym_mul(e1.get(), e1.get(), &sq), TC_OK);
  ASSERT_EQ(tc_sym_mul(minus.get(), e2.get(), &neg), TC_OK);
  ASSERT_EQ(tc_sym_add(sq, neg, &diff), TC_OK);
  const Sym a(sq), b(neg), c(diff);
  int equal = 0;
  ASSERT_EQ(tc_sym_equal(c.get(), h2.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  char* json = nullptr;
  ASSERT_EQ(tc_sym_format(c.get(), "s", TC_JSON, &json), TC_OK);
  tc_sym* back = nullptr;
  const std::string j = take(json);
  ASSERT_EQ(tc_sym_from_json(j.c_str(), &back), TC_OK);
  const Sym d(back);
  ASSERT_EQ(tc_sym_equal(d.get(), h2.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  tc_sym* projected = nullptr;
  const Sym e3 = sym("e[3]");
  ASSERT_EQ(tc_sym_project(e3.get(), 2, &projected), TC_OK);
  const Sym zero(projected), z = sym("0");
  ASSERT_EQ(tc_sym_equal(zero.get(), z.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  tc_sym* out = nullptr;
  EXPECT_EQ(tc_sym_parse("h[2", nullptr, &out), TC_ERR_PARSE);
  EXPECT_EQ(out, nullptr);
  EXPECT_NE(std::string(tc_last_error()), "");
  EXPECT_EQ(tc_sym_parse("h[2]", "p", &out), TC_ERR_PARSE);
  EXPECT_EQ(tc_sym_parse("h[2]", "z", &out), TC_ERR_PARSE);
  EXPECT_EQ(tc_sym_parse(nullptr, nullptr, &out), TC_ERR_ARGUMENT);
  EXPECT_EQ(tc_sym_parse("h[2]", nullptr, nullptr), TC_ERR_ARGUMENT);
  EXPECT_EQ(tc_sym_from_json("[", &out), TC_ERR_PARSE);

  tc_nh* nh = nullptr;
  EXPECT_EQ(tc_nh_parse(2, "d2", &nh), TC_ERR_DOMAIN);
  EXPECT_EQ(nh, nullptr);
  char* text = nullptr;
  EXPECT_EQ(tc_nh_format(nullptr, TC_TEXT, &text), TC_ERR_ARGUMENT);
  EXPECT_EQ(tc_gaussian_binomial(2, 3, TC_TEXT, &text), TC_ERR_DOMAIN);
  EXPECT_EQ(text, nullptr);
  EXPECT_EQ(tc_gaussian_binomial(4, 2, static_cast<tc_format>(7), &text), TC_ERR_ARGUMENT);

  tc_cartan* cd = nullptr;
  EXPECT_EQ(tc_cartan_new(1, &cd), TC_ERR_DOMAIN);

  // The message is per thread.
  EXPECT_EQ(tc_sym_parse("q[1]", nullptr, &out), TC_ERR_PARSE);
  const std::string here = tc_last_error();
  std::string there = "unset";
  std::thread([&] { there = tc_last_error(); }).join();
  EXPECT_FALSE(here.empty());
  EXPECT_EQ(there, "");

  tc_string_free(nullptr);
  tc_sym_free(nullptr);
}

TEST(CApi, NilHecke) {
  tc_nh* raw = nullptr;
  ASSERT_EQ(tc_nh_parse(2, "d1", &raw), TC_OK);
  const Nh d1(raw);
  char* text = nullptr;
  ASSERT_EQ(tc_nh_trace(d1.get(), TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "0\n");

  ASSERT_EQ(tc_nh_parse(2, "x1", &raw), TC_OK);
  const Nh x1(raw);
  ASSERT_EQ(tc_nh_matrix(x1.get(), TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "basis: 1; x1\n[0 | h[2] - h[1,1]]\n[1 | h[1]]\n");
  ASSERT_EQ(tc_nh_act(d1.get(), "x1", TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "1\n");

  ASSERT_EQ(tc_nh_idempotent(3, &raw), TC_OK);
  const Nh e(raw);
  tc_nh* sq = nullptr;
  ASSERT_EQ(tc_nh_compose(e.get(), e.get(), &sq), TC_OK);
  const Nh e2(sq);
  int equal = 0;
  ASSERT_EQ(tc_nh_equal(e.get(), e2.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);
  EXPECT_EQ(tc_nh_compose(e.get(), d1.get(), &sq), TC_ERR_DOMAIN);

  ASSERT_EQ(tc_nh_format(e.get(), TC_JSON, &text), TC_OK);
  const std::string json = take(text);
  ASSERT_EQ(tc_nh_from_json(json.c_str(), &raw), TC_OK);
  const Nh back(raw);
  ASSERT_EQ(tc_nh_equal(e.get(), back.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  const int parts[] = {2, 1};
  ASSERT_EQ(tc_nh_basis_class(3, parts, 2, TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "-h[3] + h[2,1]\n");
  const int bad[] = {1, 2};
  EXPECT_EQ(tc_nh_basis_class(3, bad, 2, TC_TEXT, &text), TC_ERR_DOMAIN);

  int passed = 0;
  ASSERT_EQ(tc_nh_verify(3, TC_TEXT, &text, &passed), TC_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(text).find("SUMMARY n=3"), std::string::npos);
}

TEST(CApi, CartanGate) {
  Cartan cd = cartan(3);
  int ok = 0;
  ASSERT_EQ(tc_cartan_gate_ok(cd.get(), &ok), TC_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_EQ(tc_cartan_set_t(cd.get(), 1, 1, "2"), TC_ERR_DOMAIN);
  EXPECT_EQ(tc_cartan_set_t(cd.get(), 1, 2, "0"), TC_ERR_DOMAIN);
  EXPECT_EQ(tc_cartan_set_t(cd.get(), 1, 2, "one"), TC_ERR_PARSE);
  ASSERT_EQ(tc_cartan_set_t(cd.get(), 1, 2, "-1"), TC_OK);
  ASSERT_EQ(tc_cartan_gate_ok(cd.get(), &ok), TC_OK);
  EXPECT_EQ(ok, 0);

  const int w[] = {0, 0};
  tc_center* raw = nullptr;
  ASSERT_EQ(tc_center_parse(cd.get(), w, 2, "1", &raw), TC_OK);
  const Center unit(raw);
  tc_vector* v = nullptr;
  ASSERT_EQ(tc_vector_from_center(unit.get(), &v), TC_OK);
  const Vector vec(v);
  tc_vector* image = nullptr;
  EXPECT_EQ(tc_current_act(cd.get(), "x+[1,0]", vec.get(), &image), TC_ERR_DOMAIN);
  EXPECT_EQ(image, nullptr);
}

TEST(CApi, Bubbles) {
  const Cartan cd = cartan(2);
  const int w[] = {1};
  tc_center* raw = nullptr;
  ASSERT_EQ(tc_bubble_cc(cd.get(), 1, 2, w, 1, &raw), TC_OK);
  const Center cc(raw);
  char* text = nullptr;
  ASSERT_EQ(tc_center_format(cc.get(), TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "[1]: b[1,1]^2 - b[1,2]\n");

  ASSERT_EQ(tc_center_parse(cd.get(), w, 1, "cc[1,2]", &raw), TC_OK);
  const Center parsed(raw);
  int equal = 0;
  ASSERT_EQ(tc_center_equal(cc.get(), parsed.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  ASSERT_EQ(tc_center_format(cc.get(), TC_JSON, &text), TC_OK);
  const std::string json = take(text);
  ASSERT_EQ(tc_center_from_json(cd.get(), json.c_str(), &raw), TC_OK);
  const Center back(raw);
  ASSERT_EQ(tc_center_equal(cc.get(), back.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  tc_sym* s = nullptr;
  ASSERT_EQ(tc_center_to_sym(cc.get(), 1, &s), TC_OK);
  const Sym as_sym(s), expected = sym("h[1,1] - h[2]");
  ASSERT_EQ(tc_sym_equal(as_sym.get(), expected.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  for (auto f : {TC_POWER_DEFAULT, TC_POWER_WEIGHTED_CW, TC_POWER_WEIGHTED_CCW, TC_POWER_DERIVATIVE}) {
    ASSERT_EQ(tc_bubble_power_sum(cd.get(), 1, 3, w, 1, f, &raw), TC_OK);
    Center p(raw);
    ASSERT_EQ(tc_center_parse(cd.get(), w, 1, "p[1,3]", &raw), TC_OK);
    const Center q(raw);
    ASSERT_EQ(tc_center_equal(p.get(), q.get(), &equal), TC_OK);
    EXPECT_EQ(equal, 1) << f;
  }
  EXPECT_EQ(tc_bubble_power_sum(cd.get(), 1, 3, w, 1, static_cast<tc_power_formula>(9), &raw),
            TC_ERR_ARGUMENT);

  ASSERT_EQ(tc_bubble_absolute(cd.get(), 1, 0, 0, w, 1, &raw), TC_OK);
  Center fake(raw);
  ASSERT_EQ(tc_center_format(fake.get(), TC_TEXT, &text), TC_OK);
  EXPECT_FALSE(take(text).empty());
  EXPECT_EQ(tc_bubble_cc(cd.get(), 2, 1, w, 1, &raw), TC_ERR_DOMAIN);
  const int wrong[] = {1, 2};
  EXPECT_EQ(tc_bubble_cc(cd.get(), 1, 1, wrong, 2, &raw), TC_ERR_DOMAIN);

  ASSERT_EQ(tc_bubble_slide(cd.get(), cc.get(), 1, 1, 0, TC_JSON, &text), TC_OK);
  EXPECT_NE(take(text).find("dots"), std::string::npos);

  int ok = 0;
  ASSERT_EQ(tc_bubble_power_slide_check(cd.get(), 1, 1, 3, w, 1, &ok), TC_OK);
  EXPECT_EQ(ok, 1);
  ASSERT_EQ(tc_bubble_grassmannian_check(cd.get(), 1, 8, w, 1, &ok), TC_OK);
  EXPECT_EQ(ok, 1);
}

TEST(CApi, Current) {
  const Cartan cd = cartan(2);
  const int w[] = {2};
  tc_center* raw = nullptr;
  ASSERT_EQ(tc_center_parse(cd.get(), w, 1, "1", &raw), TC_OK);
  const Center unit(raw);
  tc_vector* v = nullptr;
  ASSERT_EQ(tc_vector_from_center(unit.get(), &v), TC_OK);
  const Vector vec(v);

  tc_vector *ef = nullptr, *fe = nullptr;
  ASSERT_EQ(tc_current_act(cd.get(), "x+[1,0] x-[1,0]", vec.get(), &ef), TC_OK);
  ASSERT_EQ(tc_current_act(cd.get(), "x-[1,0] x+[1,0]", vec.get(), &fe), TC_OK);
  const Vector a(ef), b(fe);
  char* text = nullptr;
  ASSERT_EQ(tc_vector_format(a.get(), TC_JSON, &text), TC_OK);
  const std::string json = take(text);
  tc_vector* back = nullptr;
  ASSERT_EQ(tc_vector_from_json(cd.get(), json.c_str(), &back), TC_OK);
  const Vector c(back);
  int equal = 0;
  ASSERT_EQ(tc_vector_equal(a.get(), c.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  tc_vector* h = nullptr;
  ASSERT_EQ(tc_current_act(cd.get(), "xi[1,0]", vec.get(), &h), TC_OK);
  const Vector hv(h);
  ASSERT_EQ(tc_vector_format(hv.get(), TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "[2]: 2\n");
  EXPECT_EQ(tc_current_act(cd.get(), "x+[1", vec.get(), &h), TC_ERR_PARSE);

  int passed = 0;
  ASSERT_EQ(tc_current_verify(cd.get(), -1, 1, 1, 1, 7, 1, TC_JSON, &text, &passed), TC_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(text).find("\"all_passed\":true"), std::string::npos);
  ASSERT_EQ(tc_current_sl2_check(1, 2, -2, 2, 1, 3, &passed), TC_OK);
  EXPECT_EQ(passed, 1);
  ASSERT_EQ(tc_current_calibration(TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "CANDIDATES 4 PASSING 1\nE loop clockwise outside\n");
}

TEST(CApi, Grassmannian) {
  tc_grass *raw = nullptr, *prod = nullptr;
  ASSERT_EQ(tc_grass_parse(2, 4, "s[1]", &raw), TC_OK);
  const Grass s1(raw);
  ASSERT_EQ(tc_grass_mul(s1.get(), s1.get(), &prod), TC_OK);
  const Grass sq(prod);
  char* text = nullptr;
  ASSERT_EQ(tc_grass_format(sq.get(), TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "s[2] + s[1,1]\n");
  ASSERT_EQ(tc_grass_format(sq.get(), TC_JSON, &text), TC_OK);
  const std::string json = take(text);
  ASSERT_EQ(tc_grass_from_json(json.c_str(), &raw), TC_OK);
  const Grass back(raw);
  int equal = 0;
  ASSERT_EQ(tc_grass_equal(sq.get(), back.get(), &equal), TC_OK);
  EXPECT_EQ(equal, 1);

  ASSERT_EQ(tc_grass_parse(1, 4, "s[1]", &raw), TC_OK);
  const Grass other(raw);
  EXPECT_EQ(tc_grass_mul(s1.get(), other.get(), &prod), TC_ERR_DOMAIN);

  ASSERT_EQ(tc_grass_dimension(2, 4, TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "1 + q^2 + 2q^4 + q^6 + q^8\n");
  int ok = 0;
  ASSERT_EQ(tc_grass_relations(2, 4, 4, &ok), TC_OK);
  EXPECT_EQ(ok, 1);
  ASSERT_EQ(tc_grass_chern(2, 4, TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "Gr(2,4) dimension 6 image rank 1 cokernel rank 5 not surjective\n");
  EXPECT_EQ(tc_grass_chern(5, 4, TC_TEXT, &text), TC_ERR_DOMAIN);
}

TEST(CApi, MiscSymbolic) {
  char* text = nullptr;
  ASSERT_EQ(tc_quantum_factorial(3, TC_TEXT, &text), TC_OK);
  EXPECT_EQ(take(text), "1 + 2q^2 + 2q^4 + q^6\n");
  int ok = 0;
  ASSERT_EQ(tc_sym_grassmannian_check(8, &ok), TC_OK);
  EXPECT_EQ(ok, 1);
}
