// Generated by tools/make_reference_values.py -- do not edit by hand.
// mpmath 40-digit values printed to 21 significant digits.
#pragma once
#include <complex>

namespace refvals {

using cref = std::complex<long double>;

// log_gamma, principal branch
  // loggamma(5+3i)
inline const cref lgamma_5_3i{2.24424671702021773917L, 4.71408953890492939056L};
  // loggamma(-4.3+0.7i)
inline const cref lgamma_m43_07i{-3.95405109613307304386L, -13.9895696206646864783L};
  // loggamma(0.5-2i)
inline const cref lgamma_05_m2i{-2.22265586405325821907L, 0.592536981977034588934L};
  // loggamma(-15.2-0.1i)
inline const cref lgamma_m152_m01i{-26.9016457112205341329L, 49.5935613738000405190L};

// pFq at small / moderate argument
  // 2F2[1,1/2;1/3,1/4;-2]
inline const cref f22_1_h_t_q_m2{-1.27239846391632154618L, 0.0L};
  // 1F1[1;1/4;2]
inline const cref f11_1_q_2{45.2761319991340114622L, 0.0L};
  // 3F2[-2,1,1/2;2,3;1]
inline const cref f32_term{0.854166666666666666667L, 0.0L};
  // 2F1[1,1/2;1/3;1/2]
inline const cref f21_1_h_t_05{2.64318732816601695573L, 0.0L};
  // 2F1[1,1/2;1/3;-3]
inline const cref f21_1_h_t_m3{0.0338131522169168739927L, 0.0L};
  // 2F1[1/2,3/4;2;-3]
inline const cref f21_h_34_2_m3{0.728528925834761083356L, 0.0L};
  // 2F2[1,1/2;1/3,1/4;-15]
inline const cref f22_mid_m15{0.0720285869518994078660L, 0.0L};

// confluent kernels at large / awkward arguments
  // 1F1[1/2;1/3;-500]
inline const cref f11_m500{-0.0177101614869132919398L, 0.0L};
  // 1F1[1/2;1/3;500]
inline const cref f11_p500{5.97564266562430390169e+217L, 0.0L};
  // 1F1[1/2;1/3;-4e6]
inline const cref f11_m4e6{-0.000197774163357494046228L, 0.0L};
  // 1F1[1/2;1/3;30+40i]
inline const cref f11_c3040{-23988299227247.9768463L, 19589611221335.8671490L};
  // 1F1[1/2;1/3;-60]
inline const cref f11_m60{-0.0515756041712781437515L, 0.0L};
  // 1F1[1/2;1/3;-43]
inline const cref f11_m43{-0.0611718505348901569066L, 0.0L};
  // 1F1[1/2;1/3;25i]
inline const cref f11_c25i{2.50756003943054253625L, 0.284032773893965028958L};
  // 0F1[;1/4;1e6]
inline const cref f01_p1e6{2.23206075603136156732e+869L, 0.0L};
  // 0F1[;1/4;-1e6]
inline const cref f01_m1e6{-7.99972964494165016027L, 0.0L};
  // 0F1[;1/4;-150]
inline const cref f01_m150{3.71855853143960433631L, 0.0L};
  // 0F1[;1/4;-80]
inline const cref f01_m80{2.99863378422426138838L, 0.0L};
  // 0F1[;1/4;80+60i]
inline const cref f01_c8060{311369594.118942334806L, 38936595.4814353781399L};
  // 0F1[;5/4;-2e5]
inline const cref f01_54_m2e5{0.00267700939345309466253L, 0.0L};

// Psi1 values, params (1, 1/2; 1/3, 1/4)
  // Psi1[.3,.7], double series
inline const cref psi1_03_07{20.0442722960248275142L, 0.0L};
  // Psi1[.5,-5], double series
inline const cref psi1_05_m5{-0.137873175146202468218L, 0.0L};
  // Psi1[-.6,1.1], double series
inline const cref psi1_m06_11{0.743096538179069487659L, 0.0L};
  // Psi1[-.85,2.5], double series
inline const cref psi1_m085_25{-11.2153220561699954132L, 0.0L};
  // Psi1[-10,20], outer series
inline const cref psi1_m10_20{-463755626.141832940537L, 0.0L};
  // Psi1[-10,-20], outer series
inline const cref psi1_m10_m20{-0.0891898497962343431503L, 0.0L};
  // Psi1[-3+2i,4-5i], outer series
inline const cref psi1_cplx_pt{-6.42404428701671227279L, -63.0480144730956732149L};

// Psi1 with complex parameters, double series
  // params (1.3+.4i, .7-.2i; 1.1+.3i, .9-.1i) at (.25+.1i, -.4+.3i)
inline const cref psi1_cplx_params{0.445312361676027164820L, 0.112394448486725790013L};

// algebraic expansion partial sums, family (1/2, 3/2+i; 2, 1/3), n=0, w=4, z=30
  // S_0(30), k = 0..3
inline const cref s0_sum_30{-0.0267717642174418483567L, 0.00861991237801212297156L};
  // T_0(30), k = 0..2
inline const cref t0_sum_30{-0.00112450597137103408922L, 0.00741387046938732472338L};

// 2F2 values for the large-argument expansion tests
  // 2F2[1,1/2;1/3,1/4;-40]
inline const cref f22_m40{0.0588686691186798959759L, 0.0L};
  // 2F2[1,1/2;1/3,1/4;40 exp(2 pi i/3)]
inline const cref f22_rot{0.0590383402330843864115L, 0.0213728662310846451957L};
  // 2F2[1,1/2-5;1/3,1/4-5;-40]
inline const cref f22_n5_m40{1240130.00171803038207L, 0.0L};
  // 2F2[1,1/2;1/3,1/4;50]
inline const cref f22_p50{1.02623358995206225580e+24L, 0.0L};
  // 2F2[1/2,3/2+i;2,1/3;-30]
inline const cref f22_cplx_m30{-0.0652917618826418860857L, 0.0521186800054210897025L};
  // 2F2[1/2,3/2+i;2,1/3;-20]
inline const cref f22_cplx_m20{-0.0950586043294291196538L, 0.0724237388083638685419L};
  // 2F2[1/2,3/2+i;2,1/3;-40]
inline const cref f22_cplx_m40{-0.0527844292428292825194L, 0.0402207424487845663904L};
  // 2F2[1/2,3/2+i;2,1/3;-80]
inline const cref f22_cplx_m80{-0.0362612578921385555041L, 0.0220649583757864044079L};
  // 2F2[1/2,3/2+i;2,1/3;-160]
inline const cref f22_cplx_m160{-0.0268226290699120800524L, 0.0136487702129045240657L};

// expansion coefficients
  // c_{2,0} for (1,1/2;1/3,1/4)
inline const cref ckn_k2_n0{0.0130208333333333333333L, 0.0L};
  // c_{3,2} for (1,1/2;1/3,1/4)
inline const cref ckn_k3_n2{-1.08893952546296296296L, 0.0L};
  // a_3(-10,20) for (1,1/2;1/3,1/4)
inline const cref ak_k3{7.60849729007886298201L, 0.0L};

} // namespace refvals
