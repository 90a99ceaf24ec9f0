#include "crosscycle/registry.hpp"

#include <stdexcept>

namespace crosscycle {

namespace {

// The builders below transcribe the published displays term by term, keeping
// the printed nesting so each line can be compared against its source.

const BiPoly X = BiPoly::monomial(1, 0, Rat(1));
const BiPoly Y = BiPoly::monomial(0, 1, Rat(1));

BiPoly K(long v) { return BiPoly::constant(Rat(v)); }

BiPoly lin(const Rat& c0, const Rat& cx, const Rat& cy) { return BiPoly::linear(c0, cx, cy); }

ExampleEntry make_n1() {
    BiPoly L = lin(Rat(0), Rat(1), frac(-1, 5));
    BiPoly f1 = K(-6) * frac(1, 5) + L * frac(-2, 5) + Y * frac(49, 50);
    BiPoly f2 = L * Rat(-2);
    BiPoly HL = L.pow(2) + Y * frac(-6, 5) + Y.pow(2) * frac(49, 100);

    BiPoly g1 = (K(-3892) - X.pow(3) * 125 + X.pow(2) * (K(-2) + Y) * 300 + Y * 4148 +
                 (K(-6) + Y) * Y.pow(2) * 64 - X * (K(207) + (K(-4) + Y) * Y * 16) * 15) *
                frac(1, 800);
    BiPoly g2 = (-X.pow(3) * 125 + X.pow(2) * (K(-2) + Y) * 300 -
                 X * (K(683) + (K(-4) + Y) * Y * 80) * 3 +
                 (K(-557) + Y * (K(621) + (K(-6) + Y) * Y * 16)) * 4) *
                frac(1, 640);
    BiPoly L1 = lin(frac(3, 10), frac(1, 5), frac(-4, 5));
    BiPoly L2 = lin(frac(4, 5), frac(1, 2), frac(-2, 5));
    BiPoly H1 = L1.pow(2) * frac(-2, 5) - L1 * L2 + L2.pow(2) * frac(-5, 8) + L2.pow(4) * frac(-1, 4);

    return {"N1", SaddleFamily::N1, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H1, {g1, g2}),
            {{{0.387552, 2.38307}, {1.13899, 3.06322}, {6.15242, 9.65856}, {14.4234, 20.9765}}}};
}

ExampleEntry make_n2() {
    BiPoly L = lin(Rat(0), Rat(1), frac(3, 100));
    BiPoly f1 = K(-13) * frac(1, 50) + L * frac(-3, 50) + Y * frac(-9801, 5000);
    BiPoly f2 = K(2) * frac(1, 25) + L * 2;
    BiPoly HL = -L.pow(2) - lin(Rat(0), frac(1, 25), frac(13, 100)) * 2 + Y.pow(2) * frac(-9801, 10000);

    BiPoly g1 = (K(-1072596688) + X * 2477433732L + X.pow(2) * (K(-21011) + X * 4380) * 84672 +
                 (K(818403452) + X * (K(-267317) + X * 85128) * 4473) * Y * 4 +
                 (K(-10020) + X * 6523) * Y.pow(2) * 317583 + Y.pow(3) * 932000244) *
                frac(1, 119910000);
    BiPoly g2 = (K(275724936) - X * (K(12792695) + X * (K(-4521) + X * 928) * 2016) * 48 -
                 (K(206452811) + X * (K(-21011) + X * 6570) * 14112) * Y * 4 +
                 (K(267317) - X * 170256) * Y.pow(2) * 2982 - Y.pow(3) * 230177101) *
                frac(1, 39970000);
    BiPoly L1 = lin(frac(27, 50), frac(-87, 100), frac(-93, 100));
    BiPoly L2 = lin(frac(47, 50), frac(-12, 25), frac(-71, 100));
    BiPoly H2 = L1.pow(2) * frac(7, 50) + L1 * L2 * frac(2, 25) + L2.pow(2) * frac(2, 175) -
                L1 * L2.pow(3);

    return {"N2", SaddleFamily::N2, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H2, {g1, g2}),
            {{{0.355545, 0.286309}, {0.525244, 0.451964}, {1.36335, 1.28996}, {1.89636, 1.82657}}}};
}

ExampleEntry make_n31() {
    BiPoly L = lin(Rat(0), Rat(1), frac(77, 100));
    BiPoly f1 = K(1) * frac(1, 5) + L * frac(77, 50) + Y * frac(8, 25);
    BiPoly f2 = K(-31) * frac(1, 25) - L * 2;
    BiPoly HL = lin(Rat(0), frac(31, 50), frac(1, 10)) * 2 + L.pow(2) + Y.pow(2) * frac(4, 25);

    BiPoly g1 = (K(-405967) + Y * 5474739 +
                 (X * 778786 + X.pow(2) * (K(-146848) + X * 73877) * 13 +
                  X * (K(-728887) + X * 615690) * Y * 4 + (K(-16337) + X * 31442) * Y.pow(2) * 57 +
                  Y.pow(3) * 357029) *
                     9) *
                frac(1, 4130000);
    BiPoly g2 = (-X.pow(3) * 27263925 + (K(55627) - Y * 73877) * X.pow(2) * 1053 -
                 X * (K(716899) + Y * (K(-477256) + Y * 307845) * 9) * 24 -
                 (K(862465) + Y * (K(389393) + Y * (K(-728887) + Y * 298699)) * 27) * 2) *
                frac(1, 12390000);
    BiPoly L1 = lin(frac(43, 100), frac(-24, 25), frac(-9, 20));
    BiPoly L2 = lin(frac(-39, 100), frac(39, 100), frac(57, 100));
    BiPoly H31 = L1.pow(2) * frac(73, 200) + L1.pow(2) * L2.pow(2) * frac(-3, 2) +
                 L2.pow(4) * frac(1, 4);

    return {"N31", SaddleFamily::N31, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H31, {g1, g2}),
            {{{0.190098, 0.482586}, {0.325214, 0.700087}, {0.439849, 0.86669}, {4.94215, 6.23885}}}};
}

ExampleEntry make_n32() {
    BiPoly L = lin(Rat(0), Rat(1), frac(1, 2));
    BiPoly f1 = lin(frac(3, 5), Rat(1), frac(37, 25));
    BiPoly f2 = K(4) * frac(1, 5) - L * 2;
    BiPoly HL = lin(Rat(0), frac(-2, 5), frac(3, 10)) * 2 + L.pow(2) + Y.pow(2) * frac(49, 100);

    BiPoly g1 = (K(-22688) + X.pow(3) * 55 + X.pow(2) * (K(307) - Y * 50) * 6 -
                 X * (K(-615) + Y * (K(13) + Y * 5) * 2) * 24 +
                 Y * (K(31560) + Y * (K(-6618) + Y * 485))) *
                frac(1, 1500);
    BiPoly g2 = (-X.pow(3) * 215 - X.pow(2) * (K(676) + Y * 55) * 3 +
                 X * (K(-510) + Y * (K(-307) + Y * 25)) * 12 +
                 (K(1564) + Y * (K(-1845) + Y * (K(39) + Y * 10))) * 8) *
                frac(1, 1500);
    BiPoly L1 = lin(Rat(1), frac(-3, 5), frac(-9, 10));
    BiPoly L2 = lin(frac(-4, 5), frac(-1, 10), frac(1, 10));
    BiPoly H32 = L1.pow(2) * frac(-8, 15) + L1 * L2 * frac(-4, 5) + L2.pow(2) * frac(-3, 10) +
                 L1.pow(2) * L2.pow(2) * frac(-3, 2) + L2.pow(4) * frac(1, 4);

    return {"N32", SaddleFamily::N32, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H32, {g1, g2}),
            {{{1.60038, 0.971298}, {1.72908, 1.12275}, {3.35256, 3.01931}, {22.0218, 24.7284}}}};
}

ExampleEntry make_n41() {
    BiPoly L = lin(Rat(0), Rat(1), frac(-4, 5));
    BiPoly f1 = K(7) * frac(1, 5) + L * frac(-8, 5) + Y * frac(2, 25);
    BiPoly f2 = K(6) * frac(1, 5) - L * 2;
    BiPoly HL = L.pow(2) + lin(Rat(0), frac(-3, 5), frac(7, 10)) * 2 + Y.pow(2) * frac(1, 25);

    BiPoly g1 = (K(-8013) + X * (K(6859) - X * (K(621) + X * 80) * 2) + Y * 14302 +
                 X * (K(-927) + X * 173) * Y * 12 + (K(-513) + X * 233) * Y.pow(2) * 12 +
                 Y.pow(3) * 776) *
                frac(1, 2100);
    BiPoly g2 = (K(6927) - X.pow(3) * 775 + X.pow(2) * (K(81) + Y * 32) * 30 +
                 X * (K(-5798) + (K(207) - Y * 173) * Y * 24) -
                 Y * (K(6859) - Y * 5562 + Y.pow(2) * 932) * 2) *
                frac(1, 4200);
    BiPoly L1 = lin(frac(-9, 10), frac(1, 2), frac(1, 5));
    BiPoly L2 = lin(frac(-3, 5), frac(-1, 10), frac(4, 5));
    BiPoly H41 = L1.pow(4) * frac(-1, 4) + L2.pow(2) * frac(-1, 10) +
                 L1.pow(2) * L2.pow(2) * frac(-3, 2);

    return {"N41", SaddleFamily::N41, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H41, {g1, g2}),
            {{{2.02448, 0.845234}, {2.35986, 1.22555}, {2.70908, 1.62987}, {10.1815, 10.6126}}}};
}

ExampleEntry make_n42() {
    BiPoly L = lin(Rat(0), Rat(1), frac(-7, 10));
    BiPoly f1 = K(6) * frac(1, 5) + L * frac(-7, 5) + Y * frac(8, 25);
    BiPoly f2 = K(2) - L * 2;
    BiPoly HL = L.pow(2) + lin(Rat(0), Rat(-1), frac(3, 5)) * 2 + Y.pow(2) * frac(4, 25);

    BiPoly g1 = (K(-16108) + X * (K(28511) + X * (K(-2127) + X * 424) * 8) + Y * 34726 +
                 X * (K(-413) + X * 124) * Y * 96 + (K(-229) + X * 136) * Y.pow(2) * 96 +
                 Y.pow(3) * 5632) *
                frac(1, 3200);
    BiPoly g2 = (K(25276) + X * (K(-45083) + (K(3351) - X * 664) * X * 8) - Y * 57022 +
                 (K(709) - X * 212) * X * Y * 96 + (K(413) - X * 248) * Y.pow(2) * 96 -
                 Y.pow(3) * 8704) *
                frac(1, 6400);
    BiPoly L1 = lin(frac(7, 10), frac(-2, 5), frac(-4, 5));
    BiPoly L2 = lin(frac(-4, 5), frac(1, 2), frac(1, 5));
    BiPoly H42 = L1.pow(2) * frac(-1, 5) + L1.pow(4) * frac(-1, 4) + L1 * L2 * frac(-3, 10) +
                 L2.pow(2) * frac(-9, 80) + L1.pow(2) * L2.pow(2) * frac(-3, 2);

    return {"N42", SaddleFamily::N42, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H42, {g1, g2}),
            {{{2.55713, 0.821581}, {2.72657, 1.05173}, {3.4514, 2.00246}, {4.00261, 2.70789}}}};
}

ExampleEntry make_n51() {
    BiPoly L = lin(Rat(0), Rat(1), frac(-43, 100));
    BiPoly f1 = K(11) * frac(1, 25) + L * frac(-43, 50) + Y * frac(1058, 625);
    BiPoly f2 = K(-7) * frac(1, 50) - L * 2;
    BiPoly HL = L.pow(2) + lin(Rat(0), frac(7, 100), frac(11, 50)) * 2 + Y.pow(2) * frac(529, 625);

    BiPoly g1 = (K(-17828080) + X.pow(3) * 398806366 +
                 X.pow(2) * (K(-97025863) + Y * 222074762) * 6 +
                 Y * (K(215022709) + Y * (K(-5722053) + Y * 3962714) * 68) * 2 +
                 X * (K(354597367) + Y * (K(-55989761) + Y * 61426967) * 24)) *
                frac(1, 140000000);
    BiPoly g2 = (K(38035040) + X * (K(-590906221) - X * (K(-1102793) + X * 776391) * 918) -
                 Y * 709194734 + (K(194051726) - X * 199403183) * X * Y * 12 +
                 (K(55989761) - X * 111037381) * Y.pow(2) * 24 - Y.pow(3) * 982831472) *
                frac(1, 280000000);
    BiPoly L1 = lin(frac(1, 20), frac(19, 50), frac(13, 25));
    BiPoly L2 = lin(frac(-7, 25), frac(59, 100), frac(33, 50));
    BiPoly H51 = (-L1.pow(4) + L2.pow(4)) * frac(1, 4) + L1.pow(2) * frac(13, 100) +
                 L1.pow(2) * L2.pow(2) * frac(21, 100);

    return {"N51", SaddleFamily::N51, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H51, {g1, g2}),
            {{{0.135002, 0.072169}, {0.385675, 0.278707}, {1.17787, 1.03194}, {2.14886, 1.98091}}}};
}

ExampleEntry make_n52() {
    BiPoly L = lin(Rat(0), Rat(1), Rat(-1));
    BiPoly f1 = K(6) * frac(1, 5) + L * 2 - Y * 2;
    BiPoly f2 = K(8) * frac(1, 5) + L * 2;
    BiPoly HL = -L.pow(2) - lin(Rat(0), frac(4, 5), frac(-3, 5)) * 2 - Y.pow(2);

    BiPoly g1 = (K(-9995) + X * (K(4661) + X * (K(-352) + X * 17) * 9) * 5 +
                 (K(5816) + (K(-864) + X) * X * 9) * Y * 3 - (K(106) + X * 17) * Y.pow(2) * 81 -
                 Y.pow(3) * 729) *
                frac(1, 1500);
    BiPoly g2 = (K(90395) + X * (K(-38291) + (K(4323) - X * 388) * X * 6) * 5 -
                 (K(4661) + X * (K(-704) + X * 51) * 9) * Y * 30 - (K(-432) + X) * Y.pow(2) * 162 +
                 Y.pow(3) * 2754) *
                frac(1, 9000);
    BiPoly L1 = lin(frac(-1, 10), frac(-7, 10), frac(-3, 5));
    BiPoly L2 = lin(Rat(1), frac(-1, 2), frac(-3, 10));
    BiPoly H52 = (-L1.pow(4) + L2.pow(4)) * frac(1, 4) + L1.pow(2) * frac(5, 16) +
                 L1 * L2 * frac(1, 2) + L2.pow(2) * frac(1, 5) + L1.pow(2) * L2.pow(2) * frac(3, 5);

    return {"N52", SaddleFamily::N52, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H52, {g1, g2}),
            {{{0.52839, 1.10766}, {1.00057, 1.47942}, {1.72915, 2.02288}, {7.95553, 6.47249}}}};
}

ExampleEntry make_n61() {
    BiPoly L = lin(Rat(0), Rat(1), Rat(1));
    BiPoly f1 = K(6) * frac(1, 5) + Y * frac(18, 25) + L * 2;
    BiPoly f2 = K(1) - L * 2;
    BiPoly HL = lin(Rat(0), frac(-1, 2), frac(3, 5)) * 2 + Y.pow(2) * frac(9, 25) + L.pow(2);

    BiPoly g1 = (K(-218240) + X * (K(9544) - X * 5082 + X.pow(2) * 993) * 36 + Y * 393744 +
                 X * (K(-45808) + X * 13989) * Y * 9 + (K(-77840) + X * 51789) * Y.pow(2) * 3 +
                 Y.pow(3) * 69994) *
                frac(1, 21000);
    BiPoly g2 = (K(63232) - X * (K(16832) + X * (K(-1008) + X * 193) * 9) * 6 -
                 (K(9544) + X * (K(-3388) + X * 993) * 3) * Y * 12 +
                 (K(22904) - X * 13989) * Y.pow(2) * 3 - Y.pow(3) * 17263) *
                frac(1, 7000);
    BiPoly L1 = lin(frac(-4, 5), frac(3, 10), frac(1, 10));
    BiPoly L2 = lin(frac(-4, 5), frac(3, 5), frac(9, 10));
    BiPoly H61 = (-L1.pow(4) - L2.pow(4)) * frac(1, 4) + L2.pow(2) * frac(-1, 5) +
                 L1.pow(2) * L2.pow(2) * frac(-27, 20);

    return {"N61", SaddleFamily::N61, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H61, {g1, g2}),
            {{{2.11393, 0.946661}, {2.57797, 1.3437}, {3.8652, 2.44633}, {11.5231, 9.01165}}}};
}

ExampleEntry make_n62() {
    BiPoly L = lin(Rat(0), Rat(1), frac(-29, 50));
    BiPoly f1 = K(87) * frac(1, 50) + L * frac(-29, 25) + Y * frac(9, 1250);
    BiPoly f2 = K(37) * frac(1, 50) - L * 2;
    BiPoly HL = L.pow(2) + lin(Rat(0), frac(-37, 100), frac(87, 100)) * 2 + Y.pow(2) * frac(9, 2500);

    BiPoly g1 = (K(898774048) - X * Rat(5365417169L) - X.pow(2) * (K(-421623) + X * 62735) * 6417 +
                 Y * 3915993356L + (K(3990158) - X * 2625497) * X * Y * 1302 +
                 (K(-5047468) + X * 987185) * Y.pow(2) * 1116 + Y.pow(3) * 3286262384L) *
                frac(1, 11958250000L);
    BiPoly g2 = (X * (K(-18163986613L) + (K(678017913) - X * 261411193) * X * 31) +
                 X * (K(-281082) + X * 62735) * Y * 38502 +
                 (K(-1995079) + X * 2625497) * Y.pow(2) * 2604 - Y.pow(3) * 734465640 +
                 (K(532650799) + Y * Rat(1532976334L)) * 7) *
                frac(1, 23916500000L);
    BiPoly L1 = lin(frac(29, 100), frac(-1, 25), frac(-27, 50));
    BiPoly L2 = lin(frac(-51, 100), frac(57, 100), frac(-1, 50));
    BiPoly H62 = (-L1.pow(4) - L2.pow(4)) * frac(1, 4) + L1.pow(2) * frac(-31, 200) +
                 L1 * L2 * frac(-4, 25) + L2.pow(2) * frac(-32, 775) +
                 L1.pow(2) * L2.pow(2) * frac(12, 25);

    return {"N62", SaddleFamily::N62, PiecewiseSystem::explicit_forms(HL, {f1, f2}, H62, {g1, g2}),
            {{{0.765476, 0.0111834}, {1.07893, 0.202174}, {1.84751, 0.985982}, {3.25582, 2.97642}}}};
}

}  // namespace

const std::vector<ExampleEntry>& example_registry() {
    static const std::vector<ExampleEntry> entries = {
        make_n1(),  make_n2(),  make_n31(), make_n32(), make_n41(),
        make_n42(), make_n51(), make_n52(), make_n61(), make_n62(),
    };
    return entries;
}

const ExampleEntry& example_by_id(const std::string& id) {
    for (const ExampleEntry& e : example_registry())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace crosscycle
