#include "doctest.h"

#include "supercoinv/serialize.hpp"
#include "supercoinv/verify.hpp"

using namespace supercoinv;

TEST_SUITE("serialize")
{
    TEST_CASE("partition JSON")
    {
        CHECK(to_json(Partition{2, 1}).dump() == "[2,1]");
        CHECK(to_json(Partition()).dump() == "[]");
        CHECK(partition_from_json(Json::parse("[3,1,1]")) == Partition{3, 1, 1});
        CHECK(partition_from_key("[2,2]") == Partition{2, 2});
        CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), ParseError);
        CHECK_THROWS_AS(partition_from_json(Json::parse("{}")), ParseError);
        CHECK_THROWS_AS(partition_from_key("[2,"), ParseError);
    }

    TEST_CASE("multiplicity vector JSON")
    {
        SchurMultVector v{{Partition{3}, 1}, {Partition{2, 1}, 2}};
        CHECK(to_json(v).dump() == R"({"[3]":1,"[2,1]":2})");
        CHECK(schur_mult_from_json(to_json(v)) == v);
        CHECK(pretty(v) == "s[3] + 2s[2,1]");
    }

    TEST_CASE("QUPoly JSON and pretty printing")
    {
        Alphabet a{1, 0, 0};
        QUPoly p(a);
        p.add_term({0}, 1);
        p.add_term({1}, 2);
        p.add_term({2}, 2);
        p.add_term({3}, 1);
        CHECK(pretty(p) == "1+2q+2q²+q³");
        CHECK(qupoly_from_json(to_json(p), a) == p);
        CHECK(to_json(p).at(0).at("c").is_string());

        Alphabet b{2, 1, 0};
        QUPoly r(b);
        r.add_term({1, 0, 1}, -3);
        r.add_term({0, 0, 0}, 1);
        r.add_term({0, 12, 0}, 1);
        CHECK(qupoly_from_json(to_json(r), b) == r);
        CHECK(pretty(r) == "1-3qu+t¹²");
        CHECK(pretty(QUPoly(b)) == "0");
        QUPoly big(b);
        big.add_term({1, 0, 0}, Integer("123456789012345678901234567890"));
        CHECK(qupoly_from_json(to_json(big), b) == big);
        CHECK_THROWS_AS(qupoly_from_json(to_json(r), a), ParseError);
        CHECK_THROWS_AS(qupoly_from_json(Json::parse(R"([{"e":[-1],"c":"1"}])"), a), ParseError);
    }

    TEST_CASE("expansion JSON")
    {
        SuperSchurExpansion e;
        e.k = 1;
        e.j = 1;
        e.n = 3;
        e.degree_bound = 3;
        e.coeffs = {{Partition{3}, 1}, {Partition{1, 1}, 2}};
        Json j = to_json(e);
        SuperSchurExpansion back = expansion_from_json(j);
        CHECK(back.coeffs == e.coeffs);
        CHECK(back.k == 1);
        CHECK(back.degree_bound == 3);
    }

    TEST_CASE("frobenius series and coefficient table round trip")
    {
        for (auto [n, k, j] : std::vector<std::tuple<int, int, int>>{{3, 1, 1}, {3, 0, 2}, {2, 2, 1}, {4, 1, 0}}) {
            FrobeniusSeries f = shared_engine(n, k, j).frobenius_series();
            Json jf = to_json(f);
            CHECK(frobenius_from_json(jf) == f);
            CHECK(frobenius_from_json(Json::parse(jf.dump())) == f);
            CoeffTable t = coeff_table(f);
            Json jt = to_json(t);
            CHECK(coeff_table_from_json(Json::parse(jt.dump())) == t);
            CHECK(jt.at("source") == Json::array({k, j}));
        }
        CoeffTable t = coeff_table(shared_engine(3, 1, 1).frobenius_series());
        const Json entries = to_json(t).at("entries");
        PartitionPairOrder lt;
        for (size_t i = 1; i < entries.size(); ++i) {
            std::pair<Partition, Partition> a{partition_from_json(entries[i - 1]["lambda"]), partition_from_json(entries[i - 1]["mu"])};
            std::pair<Partition, Partition> b{partition_from_json(entries[i]["lambda"]), partition_from_json(entries[i]["mu"])};
            CHECK(lt(a, b));
        }
        CHECK_THROWS_AS(frobenius_from_json(Json::parse(R"({"n":2,"k":1,"j":0,"components":[{"deg":{"r":[1,1],"s":[]},"mults":{}}]})")),
                        ParseError);
        CHECK_THROWS_AS(coeff_table_from_json(Json::parse(R"({"n":2,"source":[1],"entries":[]})")), ParseError);
    }

    TEST_CASE("text and CSV renderings")
    {
        FrobeniusSeries f = shared_engine(3, 1, 0).frobenius_series();
        CHECK(frobenius_text(f) == "1: s[3]\nq: s[2,1]\nq²: s[2,1]\nq³: s[1,1,1]\n");
        CHECK(frobenius_csv(f).rfind("r1,mu,mult\n0,\"[3]\",1\n", 0) == 0);
        CoeffTable t = coeff_table(f);
        CHECK(coeff_table_csv(t).rfind("lambda,mu,c\n\"[]\",\"[3]\",1\n", 0) == 0);
        CHECK(coeff_table_text(t).find("from (k,j)=(1,0)") != std::string::npos);
        CHECK(qupoly_csv(shared_engine(3, 1, 0).hilbert_series()) == "q,coeff\n0,1\n1,2\n2,2\n3,1\n");
    }

    TEST_CASE("check report JSON")
    {
        CheckReport r;
        r.id = "artin";
        r.params = Json{{"n", 3}};
        r.pass = false;
        r.witness = Json{{"lambda", Json::array()}};
        r.seconds = 0.5;
        Json j = to_json(r);
        CHECK(j.at("status") == "fail");
        CheckReport back = check_report_from_json(j);
        CHECK(to_json(back) == j);
        j["witness"] = nullptr;
        CHECK_THROWS_AS(check_report_from_json(j), ParseError);
        j["status"] = "maybe";
        CHECK_THROWS_AS(check_report_from_json(j), ParseError);
    }
}
