#include "fif/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace fif {
namespace {

// Gauss-Legendre abscissae and weights on [-1, 1], 30 significant digits.

constexpr double kNodes1[] = {
    0.0,
};
constexpr double kWeights1[] = {
    2.000000000000000000000000000000e+00,
};

constexpr double kNodes2[] = {
    -5.773502691896257645091487805020e-01,
    5.773502691896257645091487805020e-01,
};
constexpr double kWeights2[] = {
    1.000000000000000000000000000000e+00,
    1.000000000000000000000000000000e+00,
};

constexpr double kNodes3[] = {
    -7.745966692414833770358530799565e-01,
    0.0,
    7.745966692414833770358530799565e-01,
};
constexpr double kWeights3[] = {
    5.555555555555555555555555555556e-01,
    8.888888888888888888888888888889e-01,
    5.555555555555555555555555555556e-01,
};

constexpr double kNodes4[] = {
    -8.611363115940525752239464888928e-01,
    -3.399810435848562648026657591032e-01,
    3.399810435848562648026657591032e-01,
    8.611363115940525752239464888928e-01,
};
constexpr double kWeights4[] = {
    3.478548451374538573730639492220e-01,
    6.521451548625461426269360507780e-01,
    6.521451548625461426269360507780e-01,
    3.478548451374538573730639492220e-01,
};

constexpr double kNodes5[] = {
    -9.061798459386639927976268782994e-01,
    -5.384693101056830910363144207002e-01,
    0.0,
    5.384693101056830910363144207002e-01,
    9.061798459386639927976268782994e-01,
};
constexpr double kWeights5[] = {
    2.369268850561890875142640407199e-01,
    4.786286704993664680412915148356e-01,
    5.688888888888888888888888888889e-01,
    4.786286704993664680412915148356e-01,
    2.369268850561890875142640407199e-01,
};

constexpr double kNodes6[] = {
    -9.324695142031520278123015544940e-01,
    -6.612093864662645136613995950199e-01,
    -2.386191860831969086305017216807e-01,
    2.386191860831969086305017216807e-01,
    6.612093864662645136613995950199e-01,
    9.324695142031520278123015544940e-01,
};
constexpr double kWeights6[] = {
    1.713244923791703450402961421727e-01,
    3.607615730481386075698335138377e-01,
    4.679139345726910473898703439896e-01,
    4.679139345726910473898703439896e-01,
    3.607615730481386075698335138377e-01,
    1.713244923791703450402961421727e-01,
};

constexpr double kNodes7[] = {
    -9.491079123427585245261896840479e-01,
    -7.415311855993944398638647732808e-01,
    -4.058451513773971669066064120770e-01,
    0.0,
    4.058451513773971669066064120770e-01,
    7.415311855993944398638647732808e-01,
    9.491079123427585245261896840479e-01,
};
constexpr double kWeights7[] = {
    1.294849661688696932706114326791e-01,
    2.797053914892766679014677714238e-01,
    3.818300505051189449503697754890e-01,
    4.179591836734693877551020408163e-01,
    3.818300505051189449503697754890e-01,
    2.797053914892766679014677714238e-01,
    1.294849661688696932706114326791e-01,
};

constexpr double kNodes8[] = {
    -9.602898564975362316835608685695e-01,
    -7.966664774136267395915539364758e-01,
    -5.255324099163289858177390491892e-01,
    -1.834346424956498049394761423602e-01,
    1.834346424956498049394761423602e-01,
    5.255324099163289858177390491892e-01,
    7.966664774136267395915539364758e-01,
    9.602898564975362316835608685695e-01,
};
constexpr double kWeights8[] = {
    1.012285362903762591525313543100e-01,
    2.223810344533744705443559944262e-01,
    3.137066458778872873379622019866e-01,
    3.626837833783619829651504492772e-01,
    3.626837833783619829651504492772e-01,
    3.137066458778872873379622019866e-01,
    2.223810344533744705443559944262e-01,
    1.012285362903762591525313543100e-01,
};

constexpr double kNodes9[] = {
    -9.681602395076260898355762029037e-01,
    -8.360311073266357942994297880697e-01,
    -6.133714327005903973087020393415e-01,
    -3.242534234038089290385380146433e-01,
    0.0,
    3.242534234038089290385380146433e-01,
    6.133714327005903973087020393415e-01,
    8.360311073266357942994297880697e-01,
    9.681602395076260898355762029037e-01,
};
constexpr double kWeights9[] = {
    8.127438836157441197189215811052e-02,
    1.806481606948574040584720312429e-01,
    2.606106964029354623187428694186e-01,
    3.123470770400028400686304065844e-01,
    3.302393550012597631645250692870e-01,
    3.123470770400028400686304065844e-01,
    2.606106964029354623187428694186e-01,
    1.806481606948574040584720312429e-01,
    8.127438836157441197189215811052e-02,
};

constexpr double kNodes10[] = {
    -9.739065285171717200779640120845e-01,
    -8.650633666889845107320966884235e-01,
    -6.794095682990244062343273651149e-01,
    -4.333953941292471907992659431658e-01,
    -1.488743389816312108848260011297e-01,
    1.488743389816312108848260011297e-01,
    4.333953941292471907992659431658e-01,
    6.794095682990244062343273651149e-01,
    8.650633666889845107320966884235e-01,
    9.739065285171717200779640120845e-01,
};
constexpr double kWeights10[] = {
    6.667134430868813759356880989333e-02,
    1.494513491505805931457763396577e-01,
    2.190863625159820439955349342282e-01,
    2.692667193099963550912269215695e-01,
    2.955242247147528701738929946513e-01,
    2.955242247147528701738929946513e-01,
    2.692667193099963550912269215695e-01,
    2.190863625159820439955349342282e-01,
    1.494513491505805931457763396577e-01,
    6.667134430868813759356880989333e-02,
};

constexpr double kNodes11[] = {
    -9.782286581460569928039380011229e-01,
    -8.870625997680952990751577693039e-01,
    -7.301520055740493240934162520312e-01,
    -5.190961292068118159257256694586e-01,
    -2.695431559523449723315319854009e-01,
    0.0,
    2.695431559523449723315319854009e-01,
    5.190961292068118159257256694586e-01,
    7.301520055740493240934162520312e-01,
    8.870625997680952990751577693039e-01,
    9.782286581460569928039380011229e-01,
};
constexpr double kWeights11[] = {
    5.566856711617366648275372044255e-02,
    1.255803694649046246346942992239e-01,
    1.862902109277342514260976414317e-01,
    2.331937645919904799185237048432e-01,
    2.628045445102466621806888698905e-01,
    2.729250867779006307144835283363e-01,
    2.628045445102466621806888698905e-01,
    2.331937645919904799185237048432e-01,
    1.862902109277342514260976414317e-01,
    1.255803694649046246346942992239e-01,
    5.566856711617366648275372044255e-02,
};

constexpr double kNodes12[] = {
    -9.815606342467192506905490901493e-01,
    -9.041172563704748566784658661191e-01,
    -7.699026741943046870368938332128e-01,
    -5.873179542866174472967024189405e-01,
    -3.678314989981801937526915366437e-01,
    -1.252334085114689154724413694639e-01,
    1.252334085114689154724413694639e-01,
    3.678314989981801937526915366437e-01,
    5.873179542866174472967024189405e-01,
    7.699026741943046870368938332128e-01,
    9.041172563704748566784658661191e-01,
    9.815606342467192506905490901493e-01,
};
constexpr double kWeights12[] = {
    4.717533638651182719461596148502e-02,
    1.069393259953184309602547181940e-01,
    1.600783285433462263346525295434e-01,
    2.031674267230659217490644558098e-01,
    2.334925365383548087608498989249e-01,
    2.491470458134027850005624360430e-01,
    2.491470458134027850005624360430e-01,
    2.334925365383548087608498989249e-01,
    2.031674267230659217490644558098e-01,
    1.600783285433462263346525295434e-01,
    1.069393259953184309602547181940e-01,
    4.717533638651182719461596148502e-02,
};

}  // namespace

GaussRule gauss_rule(int points) {
  switch (points) {
    case 1: return {kNodes1, kWeights1};
    case 2: return {kNodes2, kWeights2};
    case 3: return {kNodes3, kWeights3};
    case 4: return {kNodes4, kWeights4};
    case 5: return {kNodes5, kWeights5};
    case 6: return {kNodes6, kWeights6};
    case 7: return {kNodes7, kWeights7};
    case 8: return {kNodes8, kWeights8};
    case 9: return {kNodes9, kWeights9};
    case 10: return {kNodes10, kWeights10};
    case 11: return {kNodes11, kWeights11};
    case 12: return {kNodes12, kWeights12};
    default:
      throw std::invalid_argument("Gauss-Legendre rule tabulated for 1..12 points, got " +
                                  std::to_string(points));
  }
}

}  // namespace fif
