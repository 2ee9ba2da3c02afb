#ifndef OMCHAIN_SRC_GAUSS_HERMITE_HPP
#define OMCHAIN_SRC_GAUSS_HERMITE_HPP

#include <array>
#include <cstddef>

namespace omchain::detail
{

// Probabilists' Gauss-Hermite rule (weight exp(-t^2/2)), normalized so the
// weights sum to one: integrating f against a unit Gaussian is
// sum_k w_k f(t_k). Nodes/weights precomputed at 64 and 32 points; the
// 32-point rule backs the convergence estimate of the bandwidth average.

inline constexpr std::size_t gh64_size = 64;
inline constexpr std::array<double, gh64_size> gh64_nodes = {
    -1.48861861433394527e+01, -1.39940499088764696e+01, -1.32556493573972851e+01, -1.25967524806057227e+01,
    -1.19890366051281543e+01, -1.14179180568206728e+01, -1.08746519883987034e+01, -1.03534759212690020e+01,
    -9.85033845788215068e+00, -9.36225254625230718e+00, -8.88693390583818044e+00, -8.42258409232858618e+00,
    -7.96775298194122072e+00, -7.52124766178730919e+00, -7.08206983080484065e+00, -6.64937145634172033e+00,
    -6.22242253262645484e+00, -5.80058710182920922e+00, -5.38330506116461383e+00, -4.97007811160242596e+00,
    -4.56045872814405051e+00, -4.15404137134090856e+00, -3.75045538522561106e+00, -3.34935917975249442e+00,
    -2.95043540153996275e+00, -2.55338687098408279e+00, -2.15793311676261057e+00, -1.76380737694280998e+00,
    -1.37075396370080527e+00, -9.78525908985029225e-01, -5.86882823305292511e-01, -1.95588910567275509e-01,
    1.95588910567275509e-01, 5.86882823305292511e-01, 9.78525908985029225e-01, 1.37075396370080527e+00,
    1.76380737694280998e+00, 2.15793311676261057e+00, 2.55338687098408279e+00, 2.95043540153996275e+00,
    3.34935917975249442e+00, 3.75045538522561106e+00, 4.15404137134090856e+00, 4.56045872814405051e+00,
    4.97007811160242596e+00, 5.38330506116461383e+00, 5.80058710182920922e+00, 6.22242253262645484e+00,
    6.64937145634172033e+00, 7.08206983080484065e+00, 7.52124766178730919e+00, 7.96775298194122072e+00,
    8.42258409232858618e+00, 8.88693390583818044e+00, 9.36225254625230718e+00, 9.85033845788215068e+00,
    1.03534759212690020e+01, 1.08746519883987034e+01, 1.14179180568206728e+01, 1.19890366051281543e+01,
    1.25967524806057227e+01, 1.32556493573972851e+01, 1.39940499088764696e+01, 1.48861861433394527e+01,
};
inline constexpr std::array<double, gh64_size> gh64_weights = {
    3.12318796510773468e-49, 9.47696319004295669e-44, 1.93017042982976018e-39, 8.78663567931036209e-36,
    1.43849212085858564e-32, 1.08838015414585549e-29, 4.43554442047087531e-27, 1.07856511035478611e-24,
    1.68290011204292824e-22, 1.77846919111227514e-20, 1.32690885546851942e-18, 7.22215357352451360e-17,
    2.94429314699772298e-15, 9.18692878732961838e-14, 2.23372685552577431e-12, 4.29642624898527116e-11,
    6.62142341095069911e-10, 8.26608442147932267e-09, 8.43764104754100057e-08, 7.09942462190665899e-07,
    4.95837972106322451e-06, 2.89199582441457369e-05, 1.41602388341360321e-04, 5.84686083069602363e-04,
    2.04382583878488398e-03, 6.06844601589150157e-03, 1.53477219955776515e-02, 3.31404859619279998e-02,
    6.12136385106764741e-02, 9.68633638959753157e-02, 1.31453231317500890e-01, 1.53108316361896840e-01,
    1.53108316361896840e-01, 1.31453231317500890e-01, 9.68633638959753157e-02, 6.12136385106764741e-02,
    3.31404859619279998e-02, 1.53477219955776515e-02, 6.06844601589150157e-03, 2.04382583878488398e-03,
    5.84686083069602363e-04, 1.41602388341360321e-04, 2.89199582441457369e-05, 4.95837972106322451e-06,
    7.09942462190665899e-07, 8.43764104754100057e-08, 8.26608442147932267e-09, 6.62142341095069911e-10,
    4.29642624898527116e-11, 2.23372685552577431e-12, 9.18692878732961838e-14, 2.94429314699772298e-15,
    7.22215357352451360e-17, 1.32690885546851942e-18, 1.77846919111227514e-20, 1.68290011204292824e-22,
    1.07856511035478611e-24, 4.43554442047087531e-27, 1.08838015414585549e-29, 1.43849212085858564e-32,
    8.78663567931036209e-36, 1.93017042982976018e-39, 9.47696319004295669e-44, 3.12318796510773468e-49,
};

inline constexpr std::size_t gh32_size = 32;
inline constexpr std::array<double, gh32_size> gh32_nodes = {
    -1.00774226742294655e+01, -9.06439921070240473e+00, -8.21972876538224462e+00, -7.46075575412151881e+00,
    -6.75593083054070487e+00, -6.08896430907698694e+00, -5.45003327362342826e+00, -4.83260461324448887e+00,
    -4.23202110999540970e+00, -3.64478124988083296e+00, -3.06813516901312155e+00, -2.49984041518739541e+00,
    -1.93800490592571739e+00, -1.38098019927214422e+00, -8.27284903779765157e-01, -2.75546419230275841e-01,
    2.75546419230275841e-01, 8.27284903779765157e-01, 1.38098019927214422e+00, 1.93800490592571739e+00,
    2.49984041518739541e+00, 3.06813516901312155e+00, 3.64478124988083296e+00, 4.23202110999540970e+00,
    4.83260461324448887e+00, 5.45003327362342826e+00, 6.08896430907698694e+00, 6.75593083054070487e+00,
    7.46075575412151881e+00, 8.21972876538224462e+00, 9.06439921070240473e+00, 1.00774226742294655e+01,
};
inline constexpr std::array<double, gh32_size> gh32_weights = {
    4.12460748901828347e-23, 5.20844959196091331e-19, 6.75529022367020369e-16, 2.37806485577780855e-13,
    3.34750123980119620e-11, 2.31251841207423929e-09, 8.88129071310589026e-08, 2.05962210395342745e-06,
    3.05598030608963359e-05, 3.02557025817062853e-04, 2.06205105130788076e-03, 9.90346170232059286e-03,
    3.41098477260920671e-02, 8.53448082720807411e-02, 1.56538993757598499e-01, 2.11705569880479283e-01,
    2.11705569880479283e-01, 1.56538993757598499e-01, 8.53448082720807411e-02, 3.41098477260920671e-02,
    9.90346170232059286e-03, 2.06205105130788076e-03, 3.02557025817062853e-04, 3.05598030608963359e-05,
    2.05962210395342745e-06, 8.88129071310589026e-08, 2.31251841207423929e-09, 3.34750123980119620e-11,
    2.37806485577780855e-13, 6.75529022367020369e-16, 5.20844959196091331e-19, 4.12460748901828347e-23,
};

} // namespace omchain::detail

#endif // OMCHAIN_SRC_GAUSS_HERMITE_HPP
