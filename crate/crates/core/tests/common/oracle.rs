// @generated by gen_oracles.py (mpmath, 50 digits). Do not edit by hand.

#![allow(dead_code)]

/// (re z, im z, ln|Γ(z)|, arg Γ(z) in (-π, π])
pub const LOG_GAMMA: &[(f64, f64, f64, f64)] = &[
    (1.0000000000000000000, 1.0000000000000000000, -0.65092319930185633889, -0.30164032046753319789),
    (0.50000000000000000000, 0.0, 0.57236494292470008707, 0.0),
    (3.7000000000000001776, -2.2000000000000001776, 0.72644675162442647431, -2.7180642924411456664),
    (0.10000000000000000555, 0.010000000000000000208, 2.2476658232303512977, -0.10390589166538166232),
    (-3.5000000000000000000, 0.20000000000000001110, -1.4896603675052907745, 0.27785620163207803160),
    (-20.300000000000000711, 5.0000000000000000000, -56.518849691986762139, 0.14291669273252370101),
    (-0.50000000000000000000, 40.000000000000000000, -65.601872111602248414, -0.84122602865816716819),
    (1.0000000000000000000, 1000.0000000000000000, -1566.4235106222008780, 2.3464050633871009419),
    (0.50000000000000000000, 123456.69999999999709, -193924.41193968630421, 1.0749403487505013595),
    (200000.00000000000000, 300000.00000000000000, 2064236.4330045901965, 0.56043304778656458167),
    (1000000.0000000000000, 0.0, 12815504.569147611660, 0.0),
    (-100000.50000000000000, 0.50000000000000000000, -1051304.7535898687310, 2.6148750788744877216),
    (1.0000000000000000000, 1000000.0000000000000, -1570788.5001010844324, -0.13479710374861069000),
    (0.25000000000000000000, -7.5000000000000000000, -11.365620394646528259, -0.93727751466784594402),
    (0.0010000000000000000208, 0.0010000000000000000208, 6.5606044738375526187, -0.78597373492965343485),
    (100.50000000000000000, 0.0, 361.43554046777762156, 0.0),
    (-7.2500000000000000000, 0.0, -7.5418834434757500244, 0.0),
    (-35.500000000000000000, 12.250000000000000000, -128.52548081152204301, 0.14477775422960946293),
    (0.29999999999999998890, -6366.1977236758139043, -10000.832812999960699, -1.3515406126204837762),
    (-12.500000000000000000, -0.75000000000000000000, -21.765724742196129888, 1.2172808909367405240),
    (7.0000000000000000000, 0.0, 6.5792512120101009951, 0.0),
    (2.5000000000000000000, 17.300000000000000711, -20.550262599389528817, -2.6532703564560488413),
    (-0.99899999999999999911, 0.0, 6.9081793857174363282, 3.1415926535897932385),
];

pub const GAMMA_1_PLUS_I: (f64, f64) = (0.49801566811835604271, -0.15494982830181068512);
pub const ARG_GAMMA_1_PLUS_I: f64 = -0.30164032046753319789;

/// (re u, im u, v, re z, im z, re Ψ, im Ψ)
pub const LAURENT: &[(f64, f64, f64, f64, f64, f64, f64)] = &[
    (1.0000000000000000000, 0.0, 2.0000000000000000000, 1.0000000000000000000, 0.0, 1.8509055490615831483, -0.000000000000000000000000000000000000000000000000000044646731742216684534),
    (1.0000000000000000000, 0.0, 2.0000000000000000000, 0.90000000000000002220, 0.50000000000000000000, 1.7172313978581929265, 0.013275868984463554581),
    (0.50000000000000000000, 0.29999999999999998890, 1.0000000000000000000, -0.69999999999999995559, 0.80000000000000004441, 0.78322072536376882018, -1.3189504877145068548),
    (2.0000000000000000000, 0.0, 3.0000000000000000000, 3.0000000000000000000, 1.0000000000000000000, 0.87649135874142609721, 0.78088768584039913373),
    (1.0000000000000000000, 0.0, 20.000000000000000000, 1.0000000000000000000, 0.0, 0.99999999929128961739, -0.0000000000000000000000000000000000000000000000000000000000014186777976271223443),
    (1.0000000000000000000, 0.0, 1.0000000000000000000, 0.40000000000000002220, -0.29999999999999998890, 1.6922154801356596432, 7.3952868373311498759),
];

pub const POWER_U1_V1_Z1: (f64, f64) = (2.3156675195221024906, -0.20943117607772531474);
pub const RECIP_U1PI_VHALFPI_Z01: (f64, f64) = (2.5126188814492958737, 0.21886328730501800402);
pub const RECIP_TITLE_Z005: (f64, f64) = (1.1087680502962800572, 0.023196976371070487051);

pub const S_MINUS_U1_QE_Z1: (f64, f64) = (0.44881050101206032465, 0.0);
pub const S_PLUS_U1_Q2_Z1: (f64, f64) = (0.71449806478602528271, 0.0);
pub const S_MINUS_COMPLEX: (f64, f64) = (0.10639175918604916935, -0.80719398512500392116);
pub const S_PLUS_COMPLEX: (f64, f64) = (0.068792612467330531214, -0.11960699635989106115);
pub const S_MINUS_U1_QE_ZM50: (f64, f64) = (35818510.058393119805, 0.0);

/// Ψ(1, 1, e^{1-2^{-j}}) for j = 1..=8
pub const PROBE_U1_V1: &[(f64, f64)] = &[
    (4.8518471546947394114, 0.38096848685881994817),
    (6.5152060513070738234, 1.6933287288159885218),
    (7.4993020042604591264, 3.1152311265541782025),
    (7.9475456108208022957, 4.1122028703294954431),
    (8.1412968112242660054, 4.6934394198056692723),
    (8.2274117764155091171, 5.0058427881558432328),
    (8.2673337898177156518, 5.1675954878988076244),
    (8.2864521616063669464, 5.2498701676598799051),
];
