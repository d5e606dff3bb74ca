#pragma once

// Reference values computed independently with mpmath at 50 digits and
// frozen here. Tests compare library output against these literals.
namespace oracle {

inline constexpr double L1_12 = 0.7603459963009463475311;
inline constexpr double L1_13 = 0.6627353910718455897137;
inline constexpr double L1_17 = 1.016084833842840752195;
inline constexpr double L1_5 = 0.4304089409640040388894;
inline constexpr double L1_8 = 0.623225240140230513394;
inline constexpr double L1_m3 = 0.6045997880780726168647;
inline constexpr double L1_m4 = 0.7853981633974483096157;
inline constexpr double L1_m7 = 1.187410411723725948785;
inline constexpr double L1_m8 = 1.110720734539591561754;
inline constexpr double L_12_24 = 0.9735667081068059856653;
inline constexpr double L_13_155 = 0.7857340888443978913074;
inline constexpr double L_17_31 = 1.085382067344505487607;
inline constexpr double L_5_18 = 0.663041411383691966485;
inline constexpr double L_5_30 = 0.8548247666485430102357;
inline constexpr double L_8_22 = 0.8978101387656002352761;
inline constexpr double L_m3_14 = 0.6859571427208630094446;
inline constexpr double L_m4_2 = 0.9159655941772190150546;
inline constexpr double L_m7_19 = 1.157939301299511943033;
inline constexpr double L_m8_26 = 1.039720386023656674084;
inline constexpr double bi_a = 2.046236863089055036605;
inline constexpr double bi_b = 1878244717.501590762679;
inline constexpr double bi_c = 0.003647518405334379525547;
inline constexpr double bi_d = 1.594058326444081191562e+31;
inline constexpr double bi_e = 2815.71662846625447147;
inline constexpr double bi_f = 0.00002305596723466180515997;
inline constexpr double bi_g = 6.121544647018650858067e+258;
inline constexpr double bj_a = 0.7651976865579665514497;
inline constexpr double bj_b = 0.1100796247705098682376;
inline constexpr double bj_c = 0.1451136307852468364292;
inline constexpr double bj_d = 0.207493319352563023754;
inline constexpr double bj_e = -0.1151619888074911783203;
inline constexpr double bj_f = -0.04364435624596484989257;
inline constexpr double bj_g = -0.1138478491494693856669;
inline constexpr double bj_h = 0.2075528933425908077879;
inline constexpr double bj_i = -0.02112028359965044501778;
inline constexpr double bj_j = 0.3528340286156377191506;
inline constexpr double bj_k = -0.2510604855968858051127;
inline constexpr double bj_l = -0.05615969044180095374934;
inline constexpr double bk_a = 0.119937771968061447368;
inline constexpr double bk_b = 0.0004267476261688669459481;
inline constexpr double bk_c = 14.84016167284450298429;
inline constexpr double bk_d = 0.4210244382407083333356;
inline constexpr double bk_e = 1.004321710757924464994e-10;
inline constexpr double bk_f = 61.37130402837754118742;
inline constexpr double bk_g = 7.371553351228240701261e-67;
inline constexpr double bk_h = 6.165741264139240150691;
inline constexpr double eta_i = 0.7682254223260566590026;
inline constexpr double eta_p_im = 0.05873955417176298880855;
inline constexpr double eta_p_re = 0.81060156190005633624;
inline constexpr double eta_quot = 7.242640687119285146405;
inline constexpr double gup_a = 0.2788055852806619764992;
inline constexpr double gup_b = 0.01887981397600138968988;
inline constexpr double gup_c = 1.108896582451979152061;
inline constexpr double gup_d = 1.971224644066058626712;
inline constexpr double gup_e = 0.1639948060142963076492;
inline constexpr double gup_f = 0.000003063725950744799643555;
inline constexpr double gup_g = 0.2193839343955202736772;
inline constexpr double gup_h = 0.07418888294626517092701;
inline constexpr double gup_i = 0.3389003309406554439817;
inline constexpr double hz_a = 10.21305536046660073888;
inline constexpr double hz_b = -1.80874174823479020128;
inline constexpr double hz_c = 1.069751477233809409417;
inline constexpr double hz_d = 3.29703413277698441598;
inline constexpr double hz_e = 16.73340446443173686232;
inline constexpr double kleinj_p_im = -1038.509453249774101441;
inline constexpr double kleinj_p_re = 2352.654261182714612484;
inline constexpr double klf_C = 0.8671324277206645551744;
inline constexpr double logeps_12 = 1.316957896924816708625;
inline constexpr double logeps_13 = 2.389526434574218608224;
inline constexpr double logeps_17 = 4.18942509452220258849;
inline constexpr double logeps_21 = 1.566799236972411078664;
inline constexpr double logeps_24 = 2.292431669561177687801;
inline constexpr double logeps_40 = 3.636892918464133646967;
inline constexpr double logeps_5 = 0.9624236501192068949955;
inline constexpr double logeps_8 = 1.762747174039086050465;
inline constexpr double psi_a = -3.502524222200132988964;
inline constexpr double psi_b = -1.036058130098535908043;
inline constexpr double theta_i = 1.003734885487739091048;
inline constexpr double theta_p_im = 0.001894996195222273392911;
inline constexpr double theta_p_re = 1.000615721589331806667;
inline constexpr double wm_a = 3.57767871964192787044;
inline constexpr double wm_b = 71.19937348938574886482;
inline constexpr double wm_c = 533.890794297064627515;
inline constexpr double wm_d = 0.2395077472185728705294;
inline constexpr double wm_e = 75883990.65906249980194;
inline constexpr double ww_a = 0.3242071571123362316663;
inline constexpr double ww_b = 0.7429768493296923838551;
inline constexpr double ww_c = 0.08550642524339955706211;
inline constexpr double ww_d = 43.01990039255749543036;
inline constexpr double ww_e = 0.08494760517156658712502;
inline constexpr double ww_f = 0.6846701133736597153425;
inline constexpr double ww_g = 0.000004305129750507034064218;
inline constexpr double zeta_3 = 1.2020569031595942854;
inline constexpr double zeta_5 = 1.036927755143369926331;
inline constexpr double zeta_7 = 1.00834927738192282684;
inline constexpr double zetap_2 = -0.9375482543158437537026;
inline constexpr double zetap_3 = -0.1981262428856368533307;

} // namespace oracle
