#ifndef STIELTJES_TESTS_ORACLE_VALUES_HPP
#define STIELTJES_TESTS_ORACLE_VALUES_HPP

// Generated by tests/oracles/generate.py (mpmath, 50 digits). Frozen.

namespace oracle {

// gamma_n(x), n = 0..4, on the grid 0.25, 0.5, 1, 1.5, 2, pi
inline const char* const kStieltjesGrid[5][6] = {
    {"4.227453533376265408089530146096683577367", "1.963510026021423479440976332998755567193", "0.5772156649015328606065120900824024310422", "-0.03648997397857652055902366700124443280684", "-0.4227843350984671393934879099175975689578", "-0.9772133079420067332920694864061823436408"},
    {"-5.518076350199403752694011044776655407108", "-1.353459680804941517708687169178064403591", "-0.07281584548367672486058637587490131913774", "0.03283468031494910112577707373828873255971", "-0.07281584548367672486058637587490131913774", "-0.4717370785341687789542234972076964144564"},
    {"7.679704425808516527200568221049176808605", "0.9688644752202907114217110623237806541826", "-0.009690363192872318484530386035212529359066", "0.007958447383887862087506009670450710721492", "-0.009690363192872318484530386035212529359066", "-0.299654389600046985872347376067359636579"},
    {"-10.6614312337958863676872651665652834506", "-0.667424273711380739555989196796920837465", "0.002053834420303345866160046542753384285716", "-0.001374969733521780118282031573459749152706", "0.002053834420303345866160046542753384285716", "-0.2110859115661268177430908711403716117343"},
    {"14.77301119821657447123362097421370651212", "0.4595474450767714581525882126603356151813", "0.002325370065467300057468170177526068000904", "-0.00212275208939544562240722287528992785538", "0.002325370065467300057468170177526068000904", "-0.1561615896174841237610651314858739077148"},
};
inline const char* const kGamma5 = "0.0007933238173010627017533348774444448307315";
inline const char* const kGamma6 = "-0.0002387693454301996098724218419080042777837";
inline const char* const kGamma7 = "-0.0005272895670577510460740975054788582819963";
inline const char* const kGamma8 = "-0.0003521233538030395096020521650012087417292";
inline const char* const kGamma1At0_1 = "-23.04225473474255476294690633528261003227";
inline const char* const kGamma2At3 = "-0.2499168701519730308180816491985450152243";
inline const char* const kZetaDD0 = "-2.006356455908584851210100026729960438199";
inline const char* const kZetaD0 = "-0.9189385332046727417803297364056176398614";
inline const char* const kZetaPrime2 = "-0.9375482543158437537025740945678649778979";
inline const char* const kZetaPrime3 = "-0.1981262428856368533306818215032857968755";
inline const char* const kZetaPrime10 = "-0.0006970330081713936936800225787050100786491";
inline const char* const kZetaDD0At0_25 = "-0.09039774321299270065231699817820277395962";
inline const char* const kZetaDD0At1_5 = "-1.994598827674723327197877086686821029959";
inline const char* const kZetaDDD0At0_5 = "-5.663133651479572886107484650692117690753";
inline const char* const kZetaDDD0 = "-6.004711166862254447761060813366375285462";
// Hurwitz zeta(s, x)
inline const char* const kHurwitz_m2_5_0_25 = "-0.008038096082003843471484852655878317990531";
inline const char* const kHurwitz_m1_1_7 = "-0.6783333333333333333333333333333333333333";
inline const char* const kHurwitz_0_5_0_5 = "-0.6048986434216303702472659142359554997598";
inline const char* const kHurwitz_1_5_1 = "2.612375348685488343348567567924071630571";
inline const char* const kHurwitz_2_3 = "0.3949340668482264364724151666460251892189";
inline const char* const kHurwitz_1_1_1 = "10.58444846495080982638640079173552303995";
inline const char* const kEta0 = "-0.5772156649015328606065120900824024310422";
inline const char* const kEta1 = "0.1875462328403652245972033846054415883839";
inline const char* const kEta2 = "-0.0516886320331928938020082230836041634454";
inline const char* const kEta3 = "0.01475165882545374406458023681437551036264";
inline const char* const kLogGammaK1At0_5 = "-0.005878814116930762006111470021569704119924";
inline const char* const kLogGammaK1Atm0_5 = "-0.2461053210760314743396627331849021899852";
inline const char* const kLogGammaK1At2_5 = "0.4961165154888893173866469752522528742366";
inline const char* const kLogGammaK2At0_5 = "0.00285095446458402731157419335417568351765";
inline const char* const kLogGammaK2Atm0_5 = "0.1138591717942271872178587208914191982364";
inline const char* const kLogGammaK2At2_5 = "0.2815064895572591252855819658790794193001";
inline const char* const kLogGammaK3At0_5 = "0.001405174925604633648174093514938521910612";
inline const char* const kLogGammaK3Atm0_5 = "-0.05630359972016622932370033592701467096897";
inline const char* const kLogGammaK3At2_5 = "0.1843894740611654055704060347867880956753";
inline const char* const kLogGammaK4At0_5 = "0.0001026122587796521631681719131486912526847";
inline const char* const kLogGammaK4Atm0_5 = "0.03210315181020791637935750468433951060656";
inline const char* const kLogGammaK4At2_5 = "0.1314747469183916757413855010491187396806";
inline const char* const kLogGammaAt0_3 = "1.095797994818075521677168142370107278445";
inline const char* const kPsiAt0_3 = "-3.502524222200132988964494507371981599538";
inline const char* const kPsiAt7_25 = "1.910453526883736028382494561222141388517";

}  // namespace oracle

#endif  // STIELTJES_TESTS_ORACLE_VALUES_HPP
