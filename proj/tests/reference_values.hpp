#pragma once

// Reference digits computed out of band with mpmath 1.3 at mp.dps = 70 and
// rounded to 55 significant digits.  Tests compare against these rather than
// against anything the library itself produced.
namespace refs {

inline constexpr const char* kPi =
    "3.141592653589793238462643383279502884197169399375105821";
inline constexpr const char* kLog2 =
    "0.6931471805599453094172321214581765680755001343602552541";
inline constexpr const char* kZeta2 =
    "1.644934066848226436472415166646025189218949901206798438";
inline constexpr const char* kZeta3 =
    "1.202056903159594285399738161511449990764986292340498882";
inline constexpr const char* kZeta5 =
    "1.036927755143369926331365486457034168057080919501912812";
inline constexpr const char* kZeta7 =
    "1.008349277381922826839797549849796759599863560565238706";
inline constexpr const char* kZeta9 =
    "1.002008392826082214417852769232412060485605851394888757";

// zeta({2}^d): pi^(2d)/(2d+1)!
inline constexpr const char* kZetaTwos2 =
    "0.8117424252833536436370027724058759270810632139390451808";
inline constexpr const char* kZetaTwos3 =
    "0.1907518241220842136964721118357975989815907793811600428";

// t({2}^d): pi^(2d)/(4^d (2d)!)
inline constexpr const char* kTTwos1 =
    "1.233700550136169827354311374984518891914212425905098828";
inline constexpr const char* kTTwos2 =
    "0.2536695079010480136365633663768362272128322543559516190";
inline constexpr const char* kTTwos3 =
    "0.02086348076335296087305163723204036238861149149481437969";

// H(r,s) = zeta({2}^r, 3, {2}^s)
inline constexpr const char* kH10 =
    "0.2288103976033537597687461489416887919325093427198821602";
inline constexpr const char* kH01 =
    "0.7115661975505724320969738060864026120925612044383392365";

// T(r,s) = t({2}^r, 3, {2}^s); T(0,0) = t(3) = 7 zeta(3) / 8
inline constexpr const char* kT00 =
    "1.051799790264644999724770891322518741919363005797936522";
inline constexpr const char* kT10 =
    "0.05385496712354472517617512291506564199545652961442372790";
inline constexpr const char* kT01 =
    "0.2392272499639162362571518830542961643781582296138113100";

// L(2) = sum_{n>=0} zeta(2n) / ((2n+2) 4^n)
inline constexpr const char* kLupu2 =
    "-0.1334343908712197592468553474310048475087466823653100733";

}  // namespace refs
