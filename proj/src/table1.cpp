#include "triality/table1.hpp"

#include <algorithm>
#include <stdexcept>

namespace triality {

namespace {

using G = G0Type;

Table1Row R(int n, const char* s0, const char* s, const char* g1, const char* g, G0Type g0, int order, int ell,
            std::vector<int> ms, int t1, int t2, std::vector<int> shape) {
    Table1Row r;
    r.n = n;
    r.s0 = s0;
    r.s = s;
    r.g1 = g1;
    r.g = g;
    r.g0 = g0;
    r.order = order;
    r.ell = ell;
    r.ms = std::move(ms);
    r.t = {t1, t2};
    r.s_shape = std::move(shape);
    return r;
}

std::vector<Table1Row> build_printed() {
    const std::vector<int> u{};  // S entry that does not add up to eight
    return {
        R(1, "F^4", "F^8", "1", "1", G::Trivial, 1, 1, {1}, 1, 1, {1, 1, 1, 1, 1, 1, 1, 1}),
        R(2, "F^4", "K^4", "C", "S2", G::Trivial, 2, 6, {1}, 2, 2, {2, 2, 2, 2}),
        R(3, "K^2", "K^4", "1", "S2", G::C2InV4, 2, 6, {1}, 3, 5, {2, 2, 2, 2}),
        R(4, "K^2", "K^4", "1", "S2", G::C2InV4, 2, 6, {1}, 4, 3, {2, 2, 2, 2}),
        R(5, "F^4", "F^2 x K^2", "<w1>", "S2", G::Trivial, 2, 6, {1}, 5, 4, u),
        R(6, "F^2 x K", "F^2 x K^2", "1", "S2", G::C2NotInV4, 2, 12, {1}, 6, 6, u),
        R(7, "F^2 x K", "F^2 x K^2", "1", "S2", G::C2NotInV4, 2, 12, {1}, 7, 7, u),
        R(8, "F x E0", "F^2 x S0^2", "1", "C3", G::C3, 3, 16, {1}, 8, 8, {1, 1, 3, 3}),
        R(9, "F^4", "K1^2 x K2^2", "<C,w1>", "S2^2", G::Trivial, 4, 3, {2, 5}, 11, 10, {2, 2, 2, 2}),
        R(10, "K^2", "K (x) K1^2", "C", "S2^2", G::C2InV4, 4, 3, {2, 3}, 9, 11, {4, 4}),
        R(11, "K^2", "K (x) K1^2", "C", "S2^2", G::C2InV4, 4, 3, {2, 4}, 10, 9, {4, 4}),
        R(12, "K1 (x) K2", "K1 (x) K2^2", "1", "S2^2", G::V4, 4, 4, {4}, 14, 13, {4, 4}),
        R(13, "F^4", "K1^2 x K2^2", "<w1,w2>", "S2^2", G::Trivial, 4, 4, {5}, 12, 14, {2, 2, 2, 2}),
        R(14, "K1 (x) K2", "K1 (x) K2^2", "1", "S2^2", G::V4, 4, 4, {3}, 13, 12, {4, 4}),
        R(15, "F^2 x K", "F^4 x K1 (x) K", "<w1>", "S2^2", G::C2NotInV4, 4, 6, {5, 6}, 18, 17, {1, 1, 1, 1, 4}),
        R(16, "K1 x K2", "K1 (x) K2^2", "1", "S2^2", G::S2Squared, 4, 6, {4, 7}, 21, 19, {4, 4}),
        R(17, "K1 x K2", "K1^2 x K2^2", "1", "S2^2", G::S2Squared, 4, 6, {3, 6}, 15, 18, {2, 2, 2, 2}),
        R(18, "K1 x K2", "K1^2 x K2^2", "1", "S2^2", G::S2Squared, 4, 6, {4, 6}, 17, 15, {2, 2, 2, 2}),
        R(19, "F^2 x K", "K1^2 x K1 x K", "<w1>", "S2^2", G::C2NotInV4, 4, 6, {5, 7}, 16, 21, {2, 2, 2, 2}),
        R(20, "K^2", "E^2", "C", "C4", G::C2InV4, 4, 2, {2}, 20, 20, {4, 4}),
        R(21, "K1 x K2", "K1 (x) K2^2", "1", "S2^2", G::S2Squared, 4, 6, {3, 7}, 19, 16, {4, 4}),
        R(22, "K1 x K2", "K1^2 x K1 (x) K2", "1", "S2^2", G::S2Squared, 4, 12, {4, 6, 7}, 23, 27, {2, 2, 4}),
        R(23, "K1 x K2", "K1^2 x K1 (x) K2", "1", "S2^2", G::S2Squared, 4, 12, {3, 6, 7}, 27, 22, {2, 2, 4}),
        R(24, "K^2", "K^2 x K (x) K1", "<w1>", "S2^2", G::C2InV4, 4, 12, {3, 4, 5}, 24, 24, {2, 2, 4}),
        R(25, "F^2 x K", "F^4 x E", "<w1>", "C4", G::C2NotInV4, 4, 12, {5}, 26, 28, {1, 1, 1, 1, 4}),
        R(26, "E0", "E0^2", "1", "C4", G::C4, 4, 12, {4}, 28, 25, {4, 4}),
        R(27, "F^2 x K", "K1^2 x K1 (x) K", "<-w1>", "S2^2", G::C2NotInV4, 4, 12, {5, 6, 7}, 22, 23, {2, 2, 4}),
        R(28, "E0", "E0 x E0", "1", "C4", G::C4, 4, 12, {3}, 25, 26, {4, 4}),
        R(29, "F^2 x K", "K^2 x K (x) K1", "C", "S2^2", G::C2NotInV4, 4, 12, {2, 6, 7}, 29, 29, {2, 2, 4}),
        R(30, "F x E0", "F^2 x E0 (x) D(E0)", "1", "S3", G::S3, 6, 16, {7, 8}, 30, 30, {1, 1, 6}),
        R(31, "F x E0", "F^2 x E", "C", "C6", G::C3, 6, 16, {2, 8}, 31, 31, {1, 1, 6}),
        R(32, "F x E0", "F^2 x E0^2", "1", "S3", G::S3, 6, 16, {6, 8}, 32, 32, {1, 1, 3, 3}),
        R(33, "E0", "E", "C", "S2^3", G::V4, 8, 1, {11, 12}, 34, 35, {8}),
        R(34, "E0", "E", "C", "S2^3", G::V4, 8, 1, {10, 14}, 35, 33, {8}),
        R(35, "F^4", "K1 x K2 x K3 x K123", "S2^3", "S2^3", G::Trivial, 8, 1, {9, 13}, 33, 34, {2, 2, 2, 2}),
        R(36, "E0", "E", "C", "Q8", G::V4, 8, 2, {20}, 36, 36, {8}),
        R(37, "K^2", "E1 x E2", "<C,w1>", "S2xC4", G::C2InV4, 8, 3, {3, 20}, 38, 40, {4, 4}),
        R(38, "E0", "E0 (x) K", "C", "S2xC4", G::C4, 8, 3, {11, 20}, 40, 37, {8}),
        R(39, "K^2", "K (x) K1 x K (x) K2", "<C,w1>", "S2^3", G::C2InV4, 8, 3, {9, 10, 11, 24}, 39, 39, {4, 4}),
        R(40, "E0", "E0 (x) K", "C", "S2xC4", G::C4, 8, 3, {10, 20}, 37, 38, {8}),
        R(41, "K^2 K", "E^2", "<C,w2>", "D4", G::C2InV4, 8, 6, {9, 11, 20}, 49, 45, {4, 4}),
        R(42, "F^2 x K", "K1 x E", "<C,w1>", "S2xC4", G::C2NotInV4, 8, 6, {9, 25}, 44, 47, u),
        R(43, "K1 x K2", "K (x) K1 x K (x) K2", "C", "S2^3", G::S2Squared, 8, 6, {10, 17, 21, 23, 29}, 48, 46, {4, 4}),
        R(44, "E0", "E", "C", "S2xC4", G::C4, 8, 6, {11, 26}, 47, 42, {8}),
        R(45, "K^2", "E^2", "<C,w2>", "D4", G::C2InV4, 8, 6, {9, 10, 20}, 41, 49, {4, 4}),
        R(46, "K1 x K2", "K (x) K1 x K (x) K2", "C", "S2^3", G::S2Squared, 8, 6, {11, 16, 18, 22, 29}, 43, 48, {4, 4}),
        R(47, "E0", "E0 (x) K", "C", "S2xC4", G::C4, 8, 6, {10, 28}, 42, 44, {8}),
        R(48, "F^2 x K", "K1^2 x K (x) K2", "<C,w1>", "S2^3", G::C2NotInV4, 8, 6, {9, 15, 19, 27, 29}, 46, 43, {2, 2, 4}),
        R(49, "E0", "E", "C", "D4", G::V4, 8, 6, {10, 11, 20}, 45, 41, {8}),
        R(50, "F^2 x K", "K^2 x E", "<w1,w2>", "D4", G::C2NotInV4, 8, 6, {13, 19, 25}, 55, 51, {2, 2, 4}),
        R(51, "E0", "E", "1", "D4", G::D4, 8, 12, {14, 21, 2, 8}, 50, 55, {8}),
        R(52, "E0", "E0^2", "1", "D4", G::D4, 8, 12, {14, 17, 28}, 54, 57, {4, 4}),
        R(53, "K1 x K2", "K (x) K1 x K (x) K2", "<w1>", "S2^3", G::S2Squared, 8, 12, {16, 19, 21, 22, 23, 24, 27}, 53, 53, {4, 4}),
        R(54, "F^2 x K", "F^2 x K x E", "<w1,w2>", "D4", G::C2NotInV4, 8, 12, {13, 15, 25}, 57, 52, {1, 1, 2, 4}),
        R(55, "E0", "E0bar", "1", "D4", G::D4, 8, 12, {12, 16, 26}, 51, 50, {8}),
        R(56, "K1 x K2", "K1^2 x E", "<w1>", "S2^3", G::S2Squared, 8, 12, {15, 17, 18, 22, 23, 24, 27}, 56, 56, {2, 2, 4}),
        R(57, "E0", "E0^2", "1", "D4", G::D4, 8, 12, {12, 18, 26}, 52, 54, {4, 4}),
        R(58, "E0", "E0^2", "1", "A4", G::A4, 12, 4, {8, 14}, 59, 60, {4, 4}),
        R(59, "F x E0", "F^2 x E0^2", "<w1,w2>", "S2^2:C3", G::C3, 12, 4, {8, 13}, 60, 58, {1, 1, 3, 3}),
        R(60, "E0", "E0^2", "1", "A4", G::A4, 12, 4, {8, 12}, 58, 59, {4, 4}),
        R(61, "F x E0", "K x K (x) E0", "C", "S2xS3", G::S3, 12, 4, {29, 30, 31, 32}, 61, 61, {2, 6}),
        R(62, "K1 x K2", "E^2", "<C,w1>", "[2^2]4", G::S2Squared, 16, 3, {39, 42}, 66, 63, {4, 4}),
        R(63, "E0", "E", "<C,w1>", "[2^2]4", G::C4, 16, 3, {39, 47}, 62, 66, {8}),
        R(64, "K^2", "E1 x E2", "S2^3", "S2xD4", G::C2InV4, 16, 3, {35, 37, 39, 41, 45}, 68, 67, {4, 4}),
        R(65, "K1 x K2", "K1 (x) K3 x K2 (x) K4", "<C,w1>", "S2^4", G::S2Squared, 16, 3, {39, 43, 46, 48, 53, 56}, 65, 65, {4, 4}),
        R(66, "E0", "E", "<C,w1>", "[2^2]4", G::C4, 16, 3, {39, 44}, 63, 62, {8}),
        R(67, "E0", "E", "<C,w1>", "S2xD4", G::V4, 16, 3, {34, 39, 40, 45, 49}, 64, 68, {8}),
        R(68, "E0", "E", "<C,w2>", "S2xD4", G::V4, 16, 3, {33, 38, 39, 41, 49}, 67, 64, {8}),
        R(69, "K1 x K2", "E^2", "<C,w1>", "[2^2]4", G::S2Squared, 16, 6, {37, 42, 48}, 73, 72, {4, 4}),
        R(70, "E0", "E", "<C,w1>", "Q8:2", G::V4, 16, 6, {36, 37, 38, 40, 41, 45, 49}, 70, 70, {8}),
        R(71, "F^2 x K", "K1^2 x E", "S2^3", "S2xD4", G::C2NotInV4, 16, 6, {35, 42, 48, 50, 54}, 75, 74, {2, 2, 4}),
        R(72, "E0", "E", "<C,w1>", "[2^2]4", G::V4, 16, 6, {40, 43, 47}, 69, 73, {8}),
        R(73, "E0", "E", "C", "[2^2]4", G::D4, 16, 6, {38, 44, 46}, 72, 69, {8}),
        R(74, "E0", "E0 (x) K", "C", "S2xD4", G::D4, 16, 6, {34, 43, 47, 51, 52}, 71, 75, {8}),
        R(75, "E0", "E0 (x) K", "C", "S2xD4", G::D4, 16, 6, {33, 44, 46, 55, 57}, 74, 71, {8}),
        R(76, "E0", "E0^2", "1", "S4", G::S4, 24, 4, {32, 52, 58}, 79, 81, {4, 4}),
        R(77, "F x R(E)", "D(E) x l2E", "<w1,w3>", "S2^2:S3", G::S3, 24, 4, {30, 50, 59}, 84, 82, {2, 6}),
        R(78, "F x E0", "D(E) x l2E", "S2^3", "S2^3:C3", G::C3, 24, 4, {31, 35, 59}, 83, 80, {2, 6}),
        R(79, "F x R(E)", "F^2 x l2E", "<w1,w3>", "S2^2:S3", G::S3, 24, 4, {32, 54, 59}, 76, 81, {1, 1, 6}),
        R(80, "E0", "E0 (x) K", "C", "S2xA4", G::A4, 24, 4, {31, 34, 58}, 78, 83, {8}),
        R(81, "E0", "E0^2", "1", "S4", G::S4, 24, 4, {32, 57, 60}, 76, 79, {4, 4}),
        R(82, "E0", "E0 (x) D(E0)", "1", "S4", G::S4, 24, 4, {30, 51, 58}, 77, 84, {8}),
        R(83, "E0", "E", "C", "S2xA4", G::A4, 24, 4, {31, 33, 60}, 78, 80, {8}),
        R(84, "E0", "E0 (x) D(E0)", "1", "S4", G::S4, 24, 4, {30, 55, 66}, 82, 77, {8}),
        R(85, "E0", "E", "S2", "~A4", G::A4, 24, 4, {31, 36}, 85, 85, {8}),
        R(86, "E0", "E", "S2^3", "S2^3:V4", G::V4, 32, 1, {64, 67, 68, 70}, 86, 86, {8}),
        R(87, "E0", "E", "<C,w1>", "S2^2:D4", G::D4, 32, 3, {63, 65, 67, 72, 74}, 92, 90, {8}),
        R(88, "E0", "E", "S2^3", "S2^3:C4", G::C4, 32, 3, {63, 64, 66}, 91, 89, {8}),
        R(89, "E0", "E", "<C,w1>", "S2^3:C4", G::D4, 32, 3, {62, 66, 67}, 88, 91, {8}),
        R(90, "E0", "E", "<C,w1>", "S2^2:D4", G::D4, 32, 3, {65, 66, 68, 73, 75}, 92, 87, {8}),
        R(91, "E0", "E", "<C,w1>", "S2^3:C4", G::D4, 32, 3, {62, 63, 68}, 89, 88, {8}),
        R(92, "K1 x K2", "E1 x E2", "S2^3", "S2^2:D4", G::S2Squared, 32, 3, {62, 64, 65, 69, 71}, 87, 90, {4, 4}),
        R(93, "F x R(E)", "D(E) x K*l2E", "S2^3", "S2xS4", G::S3, 48, 4, {61, 71, 77, 78, 79}, 94, 95, {2, 6}),
        R(94, "E0", "E0 (x) K", "C", "S2xS4", G::S4, 48, 4, {61, 75, 81, 83, 84}, 95, 93, {8}),
        R(95, "E0", "E0 (x) K", "C", "S2xS4", G::S4, 48, 4, {61, 74, 76, 80, 82}, 93, 94, {8}),
        R(96, "E0", "E", "S2^3", "S2^3:D4", G::D4, 64, 3, {86, 87, 88, 89, 90, 91, 92}, 96, 96, {8}),
        R(97, "E0", "E", "S2^3", "S2^3:A4", G::A4, 96, 1, {78, 80, 83, 85, 86}, 97, 97, {8}),
        R(98, "E0", "E", "S2^3", "S2^3:S4", G::S4, 192, 1, {93, 94, 95, 96, 97}, 98, 98, {8}),
    };
}

std::vector<Table1Erratum> build_errata() {
    return {
        {1, "MS", "1", "", "the trivial group has no proper subgroups; the printed entry names the row itself"},
        {2, "l", "6", "1", "<w0> = {1, -1} is central, so its conjugacy class is a single subgroup"},
        {3, "T", "3,5", "5,4", "mu maps the maximal subgroups 2 3 of row 10 to 2 5 of row 9 (9 -> 11 -> 10), so 3 -> 5 -> 4"},
        {4, "T", "4,3", "3,5", "mu maps the maximal subgroups 2 3 of row 10 to 2 5 of row 9 (9 -> 11 -> 10), so 3 -> 5 -> 4"},
        {5, "T", "5,4", "4,3", "mu maps the maximal subgroups 2 3 of row 10 to 2 5 of row 9 (9 -> 11 -> 10), so 3 -> 5 -> 4"},
        {20, "l", "2", "6", "the normaliser of this C4 has order 32, so the class has 192/32 = 6 members"},
        {37, "MS", "3 20", "9 20", "row 3 has order 2, index 4 here; the kernel <C,w1> of row 9 has index 2 and is maximal"},
        {38, "G0", "C4", "V4", "the group is C x <x> with x = diag(1,-1,-1,1)P(12)(34); its image is {1,(12)(34),(13)(24),(14)(23)}"},
        {40, "G0", "C4", "V4", "the group is C x <x> with x = diag(1,-1,-1,1)P(12)(34); its image is {1,(12)(34),(13)(24),(14)(23)}"},
        {50, "l", "6", "12", "rows 50, 51, 55 form one triality orbit and l is triality invariant; 51 and 55 have l = 12"},
        {51, "MS", "14 21 2 8", "14 21 28", "a split two-digit entry; class 2 (the centre) is not in a group with G1 = 1"},
        {61, "l", "4", "16", "the normaliser of C x S3 has order 12"},
        {72, "G1", "<C,w1>", "C", "every listed maximal subgroup has G1 = C, while G1 = <C,w1> would lie in three maximal subgroups"},
        {72, "G0", "V4", "D4", "with G1 = C the image has order 16/2 = 8"},
        {79, "T", "76,81", "81,76", "rows 76 and 81 give 76 -> 79 -> 81 -> 76"},
        {83, "T", "78,80", "80,78", "rows 78 and 80 give 78 -> 83 -> 80 -> 78"},
        {84, "MS", "30 55 66", "30 55 60", "class 66 has order 16, which does not divide 24; 60 is the A4 class"},
        {85, "l", "4", "8", "the normaliser of the binary tetrahedral group has order 24"},
        {90, "T", "92,87", "87,92", "mu maps the maximal subgroups 63 65 67 72 74 of row 87 to those of row 92 via column T, so 87 -> 92 -> 90"},
        {92, "T", "87,90", "90,87", "mu maps the maximal subgroups 63 65 67 72 74 of row 87 to those of row 92 via column T, so 87 -> 92 -> 90"},
    };
}

G0Type g0_from_name(const std::string& name) {
    for (int k = 0; k <= static_cast<int>(G0Type::S4); ++k) {
        auto t = static_cast<G0Type>(k);
        if (g0_name(t) == name) return t;
    }
    throw std::logic_error("unknown image type " + name);
}

void apply_erratum(std::vector<Table1Row>& rows, const Table1Erratum& e) {
    Table1Row& r = rows.at(e.row - 1);
    if (e.column == "l") {
        r.ell = std::stoi(e.corrected);
    } else if (e.column == "MS") {
        r.ms.clear();
        std::size_t pos = 0;
        while (pos < e.corrected.size()) {
            std::size_t next = e.corrected.find(' ', pos);
            std::string tok = e.corrected.substr(pos, next - pos);
            if (!tok.empty()) r.ms.push_back(std::stoi(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else if (e.column == "G1") {
        r.g1 = e.corrected;
    } else if (e.column == "G0") {
        r.g0 = g0_from_name(e.corrected);
    } else if (e.column == "T") {
        auto comma = e.corrected.find(',');
        r.t = {std::stoi(e.corrected.substr(0, comma)), std::stoi(e.corrected.substr(comma + 1))};
    } else {
        throw std::logic_error("unknown erratum column " + e.column);
    }
}

}  // namespace

int Table1Row::g1_order() const {
    if (g1 == "1") return 1;
    if (g1 == "S2^3") return 8;
    if (g1 == "C" || g1 == "S2" || g1 == "<w1>" || g1 == "<-w1>") return 2;
    return 4;  // <C,w1>, <C,w2>, <w1,w2>, <w1,w3>
}

std::vector<int> Table1Row::s0_shape() const { return g0_orbit_shape(g0); }

std::vector<int> g0_orbit_shape(G0Type t) {
    switch (t) {
        case G0Type::Trivial: return {1, 1, 1, 1};
        case G0Type::C2InV4:
        case G0Type::S2Squared: return {2, 2};
        case G0Type::C2NotInV4: return {1, 1, 2};
        case G0Type::C3:
        case G0Type::S3: return {1, 3};
        default: return {4};
    }
}

const std::vector<Table1Row>& table1_printed() {
    static const std::vector<Table1Row> rows = build_printed();
    return rows;
}

const std::vector<Table1Erratum>& table1_errata() {
    static const std::vector<Table1Erratum> e = [] {
        auto v = build_errata();
        std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
        return v;
    }();
    return e;
}

const std::vector<Table1Row>& table1_corrected() {
    static const std::vector<Table1Row> rows = [] {
        auto r = table1_printed();
        for (const auto& e : table1_errata()) apply_erratum(r, e);
        return r;
    }();
    return rows;
}

const Table1Row& table1_row(const std::vector<Table1Row>& rows, int n) {
    if (n < 1 || n > static_cast<int>(rows.size())) throw std::out_of_range("no row " + std::to_string(n));
    return rows[n - 1];
}

std::optional<std::map<int, int>> expected_order_histogram(const std::string& g) {
    static const std::map<std::string, std::map<int, int>> table = {
        {"1", {{1, 1}}},
        {"S2", {{1, 1}, {2, 1}}},
        {"C3", {{1, 1}, {3, 2}}},
        {"S2^2", {{1, 1}, {2, 3}}},
        {"C4", {{1, 1}, {2, 1}, {4, 2}}},
        {"S3", {{1, 1}, {2, 3}, {3, 2}}},
        {"C6", {{1, 1}, {2, 1}, {3, 2}, {6, 2}}},
        {"S2^3", {{1, 1}, {2, 7}}},
        {"Q8", {{1, 1}, {2, 1}, {4, 6}}},
        {"S2xC4", {{1, 1}, {2, 3}, {4, 4}}},
        {"D4", {{1, 1}, {2, 5}, {4, 2}}},
        {"A4", {{1, 1}, {2, 3}, {3, 8}}},
        {"S2^2:C3", {{1, 1}, {2, 3}, {3, 8}}},
        {"S2xS3", {{1, 1}, {2, 7}, {3, 2}, {6, 2}}},
        {"[2^2]4", {{1, 1}, {2, 7}, {4, 8}}},
        {"Q8:2", {{1, 1}, {2, 7}, {4, 8}}},
        {"S2^4", {{1, 1}, {2, 15}}},
        {"S2xD4", {{1, 1}, {2, 11}, {4, 4}}},
        {"S4", {{1, 1}, {2, 9}, {3, 8}, {4, 6}}},
        {"S2^2:S3", {{1, 1}, {2, 9}, {3, 8}, {4, 6}}},
        {"S2^3:C3", {{1, 1}, {2, 7}, {3, 8}, {6, 8}}},
        {"S2xA4", {{1, 1}, {2, 7}, {3, 8}, {6, 8}}},
        {"~A4", {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}},
        {"S2xS4", {{1, 1}, {2, 19}, {3, 8}, {4, 12}, {6, 8}}},
    };
    auto it = table.find(g);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

}  // namespace triality
