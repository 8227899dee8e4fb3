// Nested Gauss-Patterson quadrature tables on (-1,1), levels 0..8.
// Generated by scripts/gen_patterson.py (mpmath, 140 digits).
// Level l has 2^(l+1)-1 nodes; each level extends the previous one.

#include "cdpf/quad/rules.hpp"

namespace cdpf::quad::detail {

const double kPattersonNodes0[] = {
    0.0,
};
const double kPattersonWeights0[] = {
    2.0000000000000000,
};

const double kPattersonNodes1[] = {
    -0.77459666924148338,
    0.0,
    0.77459666924148338,
};
const double kPattersonWeights1[] = {
    0.55555555555555556,
    0.88888888888888889,
    0.55555555555555556,
};

const double kPattersonNodes2[] = {
    -0.96049126870802028,
    -0.77459666924148338,
    -0.43424374934680256,
    0.0,
    0.43424374934680256,
    0.77459666924148338,
    0.96049126870802028,
};
const double kPattersonWeights2[] = {
    0.10465622602646727,
    0.26848808986833344,
    0.40139741477596222,
    0.45091653865847414,
    0.40139741477596222,
    0.26848808986833344,
    0.10465622602646727,
};

const double kPattersonNodes3[] = {
    -0.99383196321275502,
    -0.96049126870802028,
    -0.88845923287225700,
    -0.77459666924148338,
    -0.62110294673722640,
    -0.43424374934680256,
    -0.22338668642896688,
    0.0,
    0.22338668642896688,
    0.43424374934680256,
    0.62110294673722640,
    0.77459666924148338,
    0.88845923287225700,
    0.96049126870802028,
    0.99383196321275502,
};
const double kPattersonWeights3[] = {
    0.017001719629940260,
    0.051603282997079740,
    0.092927195315124538,
    0.13441525524378422,
    0.17151190913639138,
    0.20062852937698902,
    0.21915685840158750,
    0.22551049979820669,
    0.21915685840158750,
    0.20062852937698902,
    0.17151190913639138,
    0.13441525524378422,
    0.092927195315124538,
    0.051603282997079740,
    0.017001719629940260,
};

const double kPattersonNodes4[] = {
    -0.99909812496766760,
    -0.99383196321275502,
    -0.98153114955374011,
    -0.96049126870802028,
    -0.92965485742974006,
    -0.88845923287225700,
    -0.83672593816886874,
    -0.77459666924148338,
    -0.70249620649152708,
    -0.62110294673722640,
    -0.53131974364437562,
    -0.43424374934680256,
    -0.33113539325797683,
    -0.22338668642896688,
    -0.11248894313318663,
    0.0,
    0.11248894313318663,
    0.22338668642896688,
    0.33113539325797683,
    0.43424374934680256,
    0.53131974364437562,
    0.62110294673722640,
    0.70249620649152708,
    0.77459666924148338,
    0.83672593816886874,
    0.88845923287225700,
    0.92965485742974006,
    0.96049126870802028,
    0.98153114955374011,
    0.99383196321275502,
    0.99909812496766760,
};
const double kPattersonWeights4[] = {
    0.0025447807915618744,
    0.0084345657393211062,
    0.016446049854387811,
    0.025807598096176654,
    0.035957103307129322,
    0.046462893261757987,
    0.056979509494123357,
    0.067207754295990704,
    0.076879620499003531,
    0.085755920049990351,
    0.093627109981264474,
    0.10031427861179558,
    0.10566989358023481,
    0.10957842105592464,
    0.11195687302095346,
    0.11275525672076869,
    0.11195687302095346,
    0.10957842105592464,
    0.10566989358023481,
    0.10031427861179558,
    0.093627109981264474,
    0.085755920049990351,
    0.076879620499003531,
    0.067207754295990704,
    0.056979509494123357,
    0.046462893261757987,
    0.035957103307129322,
    0.025807598096176654,
    0.016446049854387811,
    0.0084345657393211062,
    0.0025447807915618744,
};

const double kPattersonNodes5[] = {
    -0.99987288812035761,
    -0.99909812496766760,
    -0.99720625937222196,
    -0.99383196321275502,
    -0.98868475754742948,
    -0.98153114955374011,
    -0.97218287474858180,
    -0.96049126870802028,
    -0.94634285837340291,
    -0.92965485742974006,
    -0.91037115695700429,
    -0.88845923287225700,
    -0.86390793819369048,
    -0.83672593816886874,
    -0.80694053195021761,
    -0.77459666924148338,
    -0.73975604435269476,
    -0.70249620649152708,
    -0.66290966002478060,
    -0.62110294673722640,
    -0.57719571005204581,
    -0.53131974364437562,
    -0.48361802694584103,
    -0.43424374934680256,
    -0.38335932419873035,
    -0.33113539325797683,
    -0.27774982202182432,
    -0.22338668642896688,
    -0.16823525155220746,
    -0.11248894313318663,
    -0.056344313046592790,
    0.0,
    0.056344313046592790,
    0.11248894313318663,
    0.16823525155220746,
    0.22338668642896688,
    0.27774982202182432,
    0.33113539325797683,
    0.38335932419873035,
    0.43424374934680256,
    0.48361802694584103,
    0.53131974364437562,
    0.57719571005204581,
    0.62110294673722640,
    0.66290966002478060,
    0.70249620649152708,
    0.73975604435269476,
    0.77459666924148338,
    0.80694053195021761,
    0.83672593816886874,
    0.86390793819369048,
    0.88845923287225700,
    0.91037115695700429,
    0.92965485742974006,
    0.94634285837340291,
    0.96049126870802028,
    0.97218287474858180,
    0.98153114955374011,
    0.98868475754742948,
    0.99383196321275502,
    0.99720625937222196,
    0.99909812496766760,
    0.99987288812035761,
};
const double kPattersonWeights5[] = {
    0.00036322148184553066,
    0.0012651565562300680,
    0.0025790497946856883,
    0.0042176304415588548,
    0.0061155068221172463,
    0.0082230079572359297,
    0.010498246909621322,
    0.012903800100351266,
    0.015406750466559498,
    0.017978551568128270,
    0.020594233915912711,
    0.023231446639910269,
    0.025869679327214747,
    0.028489754745833549,
    0.031073551111687965,
    0.033603877148207731,
    0.036064432780782573,
    0.038439810249455532,
    0.040715510116944319,
    0.042877960025007734,
    0.044914531653632197,
    0.046813554990628012,
    0.048564330406673199,
    0.050157139305899537,
    0.051583253952048459,
    0.052834946790116520,
    0.053905499335266064,
    0.054789210527962865,
    0.055481404356559364,
    0.055978436510476319,
    0.056277699831254301,
    0.056377628360384717,
    0.056277699831254301,
    0.055978436510476319,
    0.055481404356559364,
    0.054789210527962865,
    0.053905499335266064,
    0.052834946790116520,
    0.051583253952048459,
    0.050157139305899537,
    0.048564330406673199,
    0.046813554990628012,
    0.044914531653632197,
    0.042877960025007734,
    0.040715510116944319,
    0.038439810249455532,
    0.036064432780782573,
    0.033603877148207731,
    0.031073551111687965,
    0.028489754745833549,
    0.025869679327214747,
    0.023231446639910269,
    0.020594233915912711,
    0.017978551568128270,
    0.015406750466559498,
    0.012903800100351266,
    0.010498246909621322,
    0.0082230079572359297,
    0.0061155068221172463,
    0.0042176304415588548,
    0.0025790497946856883,
    0.0012651565562300680,
    0.00036322148184553066,
};

const double kPattersonNodes6[] = {
    -0.99998243035489160,
    -0.99987288812035761,
    -0.99959879967191068,
    -0.99909812496766760,
    -0.99831663531840739,
    -0.99720625937222196,
    -0.99572410469840719,
    -0.99383196321275502,
    -0.99149572117810613,
    -0.98868475754742948,
    -0.98537149959852037,
    -0.98153114955374011,
    -0.97714151463970571,
    -0.97218287474858180,
    -0.96663785155841657,
    -0.96049126870802028,
    -0.95373000642576114,
    -0.94634285837340291,
    -0.93832039777959288,
    -0.92965485742974006,
    -0.92034002547001242,
    -0.91037115695700429,
    -0.89974489977694004,
    -0.88845923287225700,
    -0.87651341448470527,
    -0.86390793819369048,
    -0.85064449476835028,
    -0.83672593816886874,
    -0.82215625436498041,
    -0.80694053195021761,
    -0.79108493379984836,
    -0.77459666924148338,
    -0.75748396638051364,
    -0.73975604435269476,
    -0.72142308537009892,
    -0.70249620649152708,
    -0.68298743109107923,
    -0.66290966002478060,
    -0.64227664250975951,
    -0.62110294673722640,
    -0.59940393024224289,
    -0.57719571005204581,
    -0.55449513263193255,
    -0.53131974364437562,
    -0.50768775753371660,
    -0.48361802694584103,
    -0.45913001198983233,
    -0.43424374934680256,
    -0.40897982122988867,
    -0.38335932419873035,
    -0.35740383783153215,
    -0.33113539325797683,
    -0.30457644155671404,
    -0.27774982202182432,
    -0.25067873030348318,
    -0.22338668642896688,
    -0.19589750271110015,
    -0.16823525155220746,
    -0.14042423315256017,
    -0.11248894313318663,
    -0.084454040083710884,
    -0.056344313046592790,
    -0.028184648949745694,
    0.0,
    0.028184648949745694,
    0.056344313046592790,
    0.084454040083710884,
    0.11248894313318663,
    0.14042423315256017,
    0.16823525155220746,
    0.19589750271110015,
    0.22338668642896688,
    0.25067873030348318,
    0.27774982202182432,
    0.30457644155671404,
    0.33113539325797683,
    0.35740383783153215,
    0.38335932419873035,
    0.40897982122988867,
    0.43424374934680256,
    0.45913001198983233,
    0.48361802694584103,
    0.50768775753371660,
    0.53131974364437562,
    0.55449513263193255,
    0.57719571005204581,
    0.59940393024224289,
    0.62110294673722640,
    0.64227664250975951,
    0.66290966002478060,
    0.68298743109107923,
    0.70249620649152708,
    0.72142308537009892,
    0.73975604435269476,
    0.75748396638051364,
    0.77459666924148338,
    0.79108493379984836,
    0.80694053195021761,
    0.82215625436498041,
    0.83672593816886874,
    0.85064449476835028,
    0.86390793819369048,
    0.87651341448470527,
    0.88845923287225700,
    0.89974489977694004,
    0.91037115695700429,
    0.92034002547001242,
    0.92965485742974006,
    0.93832039777959288,
    0.94634285837340291,
    0.95373000642576114,
    0.96049126870802028,
    0.96663785155841657,
    0.97218287474858180,
    0.97714151463970571,
    0.98153114955374011,
    0.98537149959852037,
    0.98868475754742948,
    0.99149572117810613,
    0.99383196321275502,
    0.99572410469840719,
    0.99720625937222196,
    0.99831663531840739,
    0.99909812496766760,
    0.99959879967191068,
    0.99987288812035761,
    0.99998243035489160,
};
const double kPattersonWeights6[] = {
    5.0536095207862518e-5,
    0.00018073956444538836,
    0.00037774664632698466,
    0.00063260731936263354,
    0.00093836984854238150,
    0.0012895240826104174,
    0.0016811428654214699,
    0.0021088152457266329,
    0.0025687649437940204,
    0.0030577534101755311,
    0.0035728927835172996,
    0.0041115039786546930,
    0.0046710503721143217,
    0.0052491234548088591,
    0.0058434498758356395,
    0.0064519000501757369,
    0.0070724899954335555,
    0.0077033752332797418,
    0.0083428387539681577,
    0.0089892757840641357,
    0.0096411777297025367,
    0.010297116957956356,
    0.010955733387837902,
    0.011615723319955135,
    0.012275830560082770,
    0.012934839663607373,
    0.013591571009765547,
    0.014244877372916774,
    0.014893641664815182,
    0.015536775555843982,
    0.016173218729577720,
    0.016801938574103865,
    0.017421930159464174,
    0.018032216390391286,
    0.018631848256138790,
    0.019219905124727766,
    0.019795495048097499,
    0.020357755058472159,
    0.020905851445812024,
    0.021438980012503867,
    0.021956366305317825,
    0.022457265826816099,
    0.022940964229387749,
    0.023406777495314006,
    0.023854052106038540,
    0.024282165203336599,
    0.024690524744487677,
    0.025078569652949769,
    0.025445769965464766,
    0.025791626976024229,
    0.026115673376706098,
    0.026417473395058260,
    0.026696622927450360,
    0.026952749667633032,
    0.027185513229624792,
    0.027394605263981433,
    0.027579749566481873,
    0.027740702178279682,
    0.027877251476613702,
    0.027989218255238160,
    0.028076455793817247,
    0.028138849915627151,
    0.028176319033016602,
    0.028188814180192359,
    0.028176319033016602,
    0.028138849915627151,
    0.028076455793817247,
    0.027989218255238160,
    0.027877251476613702,
    0.027740702178279682,
    0.027579749566481873,
    0.027394605263981433,
    0.027185513229624792,
    0.026952749667633032,
    0.026696622927450360,
    0.026417473395058260,
    0.026115673376706098,
    0.025791626976024229,
    0.025445769965464766,
    0.025078569652949769,
    0.024690524744487677,
    0.024282165203336599,
    0.023854052106038540,
    0.023406777495314006,
    0.022940964229387749,
    0.022457265826816099,
    0.021956366305317825,
    0.021438980012503867,
    0.020905851445812024,
    0.020357755058472159,
    0.019795495048097499,
    0.019219905124727766,
    0.018631848256138790,
    0.018032216390391286,
    0.017421930159464174,
    0.016801938574103865,
    0.016173218729577720,
    0.015536775555843982,
    0.014893641664815182,
    0.014244877372916774,
    0.013591571009765547,
    0.012934839663607373,
    0.012275830560082770,
    0.011615723319955135,
    0.010955733387837902,
    0.010297116957956356,
    0.0096411777297025367,
    0.0089892757840641357,
    0.0083428387539681577,
    0.0077033752332797418,
    0.0070724899954335555,
    0.0064519000501757369,
    0.0058434498758356395,
    0.0052491234548088591,
    0.0046710503721143217,
    0.0041115039786546930,
    0.0035728927835172996,
    0.0030577534101755311,
    0.0025687649437940204,
    0.0021088152457266329,
    0.0016811428654214699,
    0.0012895240826104174,
    0.00093836984854238150,
    0.00063260731936263354,
    0.00037774664632698466,
    0.00018073956444538836,
    5.0536095207862518e-5,
};

const double kPattersonNodes7[] = {
    -0.99999759637974846,
    -0.99998243035489160,
    -0.99994399620705438,
    -0.99987288812035761,
    -0.99976049092443205,
    -0.99959879967191068,
    -0.99938033802502358,
    -0.99909812496766760,
    -0.99874561446809511,
    -0.99831663531840739,
    -0.99780535449595727,
    -0.99720625937222196,
    -0.99651414591489027,
    -0.99572410469840719,
    -0.99483150280062100,
    -0.99383196321275502,
    -0.99272134428278862,
    -0.99149572117810613,
    -0.99015137040077016,
    -0.98868475754742948,
    -0.98709252795403407,
    -0.98537149959852037,
    -0.98351865757863273,
    -0.98153114955374011,
    -0.97940628167086268,
    -0.97714151463970571,
    -0.97473445975240267,
    -0.97218287474858180,
    -0.96948465950245923,
    -0.96663785155841657,
    -0.96364062156981213,
    -0.96049126870802028,
    -0.95718821610986096,
    -0.95373000642576114,
    -0.95011529752129488,
    -0.94634285837340291,
    -0.94241156519108306,
    -0.93832039777959288,
    -0.93406843615772579,
    -0.92965485742974006,
    -0.92507893290707565,
    -0.92034002547001242,
    -0.91543758715576504,
    -0.91037115695700429,
    -0.90514035881326160,
    -0.89974489977694004,
    -0.89418456833555902,
    -0.88845923287225700,
    -0.88256884024734191,
    -0.87651341448470527,
    -0.87029305554811391,
    -0.86390793819369048,
    -0.85735831088623216,
    -0.85064449476835028,
    -0.84376688267270860,
    -0.83672593816886874,
    -0.82952219463740140,
    -0.82215625436498041,
    -0.81462878765513741,
    -0.80694053195021761,
    -0.79909229096084140,
    -0.79108493379984836,
    -0.78291939411828302,
    -0.77459666924148338,
    -0.76611781930376009,
    -0.75748396638051364,
    -0.74869629361693660,
    -0.73975604435269476,
    -0.73066452124218126,
    -0.72142308537009892,
    -0.71203315536225203,
    -0.70249620649152708,
    -0.69281376977911470,
    -0.68298743109107923,
    -0.67301883023041848,
    -0.66290966002478060,
    -0.65266166541001750,
    -0.64227664250975951,
    -0.63175643771119423,
    -0.62110294673722640,
    -0.61031811371518640,
    -0.59940393024224289,
    -0.58836243444766254,
    -0.57719571005204581,
    -0.56590588542365442,
    -0.55449513263193255,
    -0.54296566649831149,
    -0.53131974364437562,
    -0.51955966153745702,
    -0.50768775753371660,
    -0.49570640791876146,
    -0.48361802694584103,
    -0.47142506587165888,
    -0.45913001198983233,
    -0.44673538766202847,
    -0.43424374934680256,
    -0.42165768662616330,
    -0.40897982122988867,
    -0.39621280605761594,
    -0.38335932419873035,
    -0.37042208795007823,
    -0.35740383783153215,
    -0.34430734159943802,
    -0.33113539325797683,
    -0.31789081206847668,
    -0.30457644155671404,
    -0.29119514851824668,
    -0.27774982202182432,
    -0.26424337241092676,
    -0.25067873030348318,
    -0.23705884558982973,
    -0.22338668642896688,
    -0.20966523824318119,
    -0.19589750271110015,
    -0.18208649675925220,
    -0.16823525155220746,
    -0.15434681148137811,
    -0.14042423315256017,
    -0.12647058437230197,
    -0.11248894313318663,
    -0.098482396598119202,
    -0.084454040083710884,
    -0.070406976042855179,
    -0.056344313046592790,
    -0.042269164765363603,
    -0.028184648949745694,
    -0.014093886410782463,
    0.0,
    0.014093886410782463,
    0.028184648949745694,
    0.042269164765363603,
    0.056344313046592790,
    0.070406976042855179,
    0.084454040083710884,
    0.098482396598119202,
    0.11248894313318663,
    0.12647058437230197,
    0.14042423315256017,
    0.15434681148137811,
    0.16823525155220746,
    0.18208649675925220,
    0.19589750271110015,
    0.20966523824318119,
    0.22338668642896688,
    0.23705884558982973,
    0.25067873030348318,
    0.26424337241092676,
    0.27774982202182432,
    0.29119514851824668,
    0.30457644155671404,
    0.31789081206847668,
    0.33113539325797683,
    0.34430734159943802,
    0.35740383783153215,
    0.37042208795007823,
    0.38335932419873035,
    0.39621280605761594,
    0.40897982122988867,
    0.42165768662616330,
    0.43424374934680256,
    0.44673538766202847,
    0.45913001198983233,
    0.47142506587165888,
    0.48361802694584103,
    0.49570640791876146,
    0.50768775753371660,
    0.51955966153745702,
    0.53131974364437562,
    0.54296566649831149,
    0.55449513263193255,
    0.56590588542365442,
    0.57719571005204581,
    0.58836243444766254,
    0.59940393024224289,
    0.61031811371518640,
    0.62110294673722640,
    0.63175643771119423,
    0.64227664250975951,
    0.65266166541001750,
    0.66290966002478060,
    0.67301883023041848,
    0.68298743109107923,
    0.69281376977911470,
    0.70249620649152708,
    0.71203315536225203,
    0.72142308537009892,
    0.73066452124218126,
    0.73975604435269476,
    0.74869629361693660,
    0.75748396638051364,
    0.76611781930376009,
    0.77459666924148338,
    0.78291939411828302,
    0.79108493379984836,
    0.79909229096084140,
    0.80694053195021761,
    0.81462878765513741,
    0.82215625436498041,
    0.82952219463740140,
    0.83672593816886874,
    0.84376688267270860,
    0.85064449476835028,
    0.85735831088623216,
    0.86390793819369048,
    0.87029305554811391,
    0.87651341448470527,
    0.88256884024734191,
    0.88845923287225700,
    0.89418456833555902,
    0.89974489977694004,
    0.90514035881326160,
    0.91037115695700429,
    0.91543758715576504,
    0.92034002547001242,
    0.92507893290707565,
    0.92965485742974006,
    0.93406843615772579,
    0.93832039777959288,
    0.94241156519108306,
    0.94634285837340291,
    0.95011529752129488,
    0.95373000642576114,
    0.95718821610986096,
    0.96049126870802028,
    0.96364062156981213,
    0.96663785155841657,
    0.96948465950245923,
    0.97218287474858180,
    0.97473445975240267,
    0.97714151463970571,
    0.97940628167086268,
    0.98153114955374011,
    0.98351865757863273,
    0.98537149959852037,
    0.98709252795403407,
    0.98868475754742948,
    0.99015137040077016,
    0.99149572117810613,
    0.99272134428278862,
    0.99383196321275502,
    0.99483150280062100,
    0.99572410469840719,
    0.99651414591489027,
    0.99720625937222196,
    0.99780535449595727,
    0.99831663531840739,
    0.99874561446809511,
    0.99909812496766760,
    0.99938033802502358,
    0.99959879967191068,
    0.99976049092443205,
    0.99987288812035761,
    0.99994399620705438,
    0.99998243035489160,
    0.99999759637974846,
};
const double kPattersonWeights7[] = {
    6.9379364324108267e-6,
    2.5157870384280661e-5,
    5.3275293669780613e-5,
    9.0372734658751149e-5,
    0.00013575491094922872,
    0.00018887326450650491,
    0.00024921240048299729,
    0.00031630366082226448,
    0.00038974528447328229,
    0.00046918492424785041,
    0.00055429531493037471,
    0.00064476204130572478,
    0.00074028280424450333,
    0.00084057143271072246,
    0.00094536151685852538,
    0.0010544076228633168,
    0.0011674841174299594,
    0.0012843824718970102,
    0.0014049079956551446,
    0.0015288767050877656,
    0.0016561127281544526,
    0.0017864463917586498,
    0.0019197129710138724,
    0.0020557519893273465,
    0.0021944069253638388,
    0.0023355251860571609,
    0.0024789582266575679,
    0.0026245617274044296,
    0.0027721957645934510,
    0.0029217249379178198,
    0.0030730184347025783,
    0.0032259500250878685,
    0.0033803979910869204,
    0.0035362449977167777,
    0.0036933779170256508,
    0.0038516876166398709,
    0.0040110687240750234,
    0.0041714193769840789,
    0.0043326409680929829,
    0.0044946378920320679,
    0.0046573172997568548,
    0.0048205888648512683,
    0.0049843645647655386,
    0.0051485584789781778,
    0.0053130866051870566,
    0.0054778666939189508,
    0.0056428181013844442,
    0.0058078616599775674,
    0.0059729195655081658,
    0.0061379152800413850,
    0.0063027734490857587,
    0.0064674198318036867,
    0.0066317812429018879,
    0.0067957855048827734,
    0.0069593614093904229,
    0.0071224386864583872,
    0.0072849479805538071,
    0.0074468208324075910,
    0.0076079896657190566,
    0.0077683877779219912,
    0.0079279493342948491,
    0.0080866093647888600,
    0.0082443037630328680,
    0.0084009692870519326,
    0.0085565435613076896,
    0.0087109650797320869,
    0.0088641732094824943,
    0.0090161081951956432,
    0.0091667111635607884,
    0.0093159241280693951,
    0.0094636899938300653,
    0.0096099525623638830,
    0.0097546565363174115,
    0.0098977475240487497,
    0.010039172044056841,
    0.010178877529236080,
    0.010316812330947622,
    0.010452925722906012,
    0.010587167904885198,
    0.010719490006251934,
    0.010849844089337314,
    0.010978183152658912,
    0.011104461134006927,
    0.011228632913408049,
    0.011350654315980597,
    0.011470482114693874,
    0.011588074033043953,
    0.011703388747657003,
    0.011816385890830236,
    0.011927026053019270,
    0.012035270785279563,
    0.012141082601668300,
    0.012244424981611986,
    0.012345262372243838,
    0.012443560190714035,
    0.012539284826474884,
    0.012632403643542079,
    0.012722884982732383,
    0.012810698163877362,
    0.012895813488012115,
    0.012978202239537399,
    0.013057836688353049,
    0.013134690091960153,
    0.013208736697529130,
    0.013279951743930531,
    0.013348311463725180,
    0.013413793085110099,
    0.013476374833816516,
    0.013536035934956214,
    0.013592756614812396,
    0.013646518102571291,
    0.013697302631990716,
    0.013745093443001897,
    0.013789874783240937,
    0.013831631909506429,
    0.013870351089139841,
    0.013906019601325461,
    0.013938625738306851,
    0.013968158806516939,
    0.013994609127619080,
    0.014017968039456609,
    0.014038227896908623,
    0.014055382072649964,
    0.014069424957813575,
    0.014080351962553661,
    0.014088159516508301,
    0.014092845069160408,
    0.014094407090096179,
    0.014092845069160408,
    0.014088159516508301,
    0.014080351962553661,
    0.014069424957813575,
    0.014055382072649964,
    0.014038227896908623,
    0.014017968039456609,
    0.013994609127619080,
    0.013968158806516939,
    0.013938625738306851,
    0.013906019601325461,
    0.013870351089139841,
    0.013831631909506429,
    0.013789874783240937,
    0.013745093443001897,
    0.013697302631990716,
    0.013646518102571291,
    0.013592756614812396,
    0.013536035934956214,
    0.013476374833816516,
    0.013413793085110099,
    0.013348311463725180,
    0.013279951743930531,
    0.013208736697529130,
    0.013134690091960153,
    0.013057836688353049,
    0.012978202239537399,
    0.012895813488012115,
    0.012810698163877362,
    0.012722884982732383,
    0.012632403643542079,
    0.012539284826474884,
    0.012443560190714035,
    0.012345262372243838,
    0.012244424981611986,
    0.012141082601668300,
    0.012035270785279563,
    0.011927026053019270,
    0.011816385890830236,
    0.011703388747657003,
    0.011588074033043953,
    0.011470482114693874,
    0.011350654315980597,
    0.011228632913408049,
    0.011104461134006927,
    0.010978183152658912,
    0.010849844089337314,
    0.010719490006251934,
    0.010587167904885198,
    0.010452925722906012,
    0.010316812330947622,
    0.010178877529236080,
    0.010039172044056841,
    0.0098977475240487497,
    0.0097546565363174115,
    0.0096099525623638830,
    0.0094636899938300653,
    0.0093159241280693951,
    0.0091667111635607884,
    0.0090161081951956432,
    0.0088641732094824943,
    0.0087109650797320869,
    0.0085565435613076896,
    0.0084009692870519326,
    0.0082443037630328680,
    0.0080866093647888600,
    0.0079279493342948491,
    0.0077683877779219912,
    0.0076079896657190566,
    0.0074468208324075910,
    0.0072849479805538071,
    0.0071224386864583872,
    0.0069593614093904229,
    0.0067957855048827734,
    0.0066317812429018879,
    0.0064674198318036867,
    0.0063027734490857587,
    0.0061379152800413850,
    0.0059729195655081658,
    0.0058078616599775674,
    0.0056428181013844442,
    0.0054778666939189508,
    0.0053130866051870566,
    0.0051485584789781778,
    0.0049843645647655386,
    0.0048205888648512683,
    0.0046573172997568548,
    0.0044946378920320679,
    0.0043326409680929829,
    0.0041714193769840789,
    0.0040110687240750234,
    0.0038516876166398709,
    0.0036933779170256508,
    0.0035362449977167777,
    0.0033803979910869204,
    0.0032259500250878685,
    0.0030730184347025783,
    0.0029217249379178198,
    0.0027721957645934510,
    0.0026245617274044296,
    0.0024789582266575679,
    0.0023355251860571609,
    0.0021944069253638388,
    0.0020557519893273465,
    0.0019197129710138724,
    0.0017864463917586498,
    0.0016561127281544526,
    0.0015288767050877656,
    0.0014049079956551446,
    0.0012843824718970102,
    0.0011674841174299594,
    0.0010544076228633168,
    0.00094536151685852538,
    0.00084057143271072246,
    0.00074028280424450333,
    0.00064476204130572478,
    0.00055429531493037471,
    0.00046918492424785041,
    0.00038974528447328229,
    0.00031630366082226448,
    0.00024921240048299729,
    0.00018887326450650491,
    0.00013575491094922872,
    9.0372734658751149e-5,
    5.3275293669780613e-5,
    2.5157870384280661e-5,
    6.9379364324108267e-6,
};

const double kPattersonNodes8[] = {
    -0.99999967295673438,
    -0.99999759637974846,
    -0.99999229813625759,
    -0.99998243035489160,
    -0.99996673009848628,
    -0.99994399620705438,
    -0.99991308114467828,
    -0.99987288812035761,
    -0.99982236367978774,
    -0.99976049092443205,
    -0.99968628644831773,
    -0.99959879967191068,
    -0.99949711246718719,
    -0.99938033802502358,
    -0.99924761894334247,
    -0.99909812496766760,
    -0.99893105083081056,
    -0.99874561446809511,
    -0.99854105569716791,
    -0.99831663531840739,
    -0.99807163452493032,
    -0.99780535449595727,
    -0.99751711606347240,
    -0.99720625937222196,
    -0.99687214348526016,
    -0.99651414591489027,
    -0.99613166207931504,
    -0.99572410469840719,
    -0.99529090314881030,
    -0.99483150280062100,
    -0.99434536435672341,
    -0.99383196321275502,
    -0.99329078885168497,
    -0.99272134428278862,
    -0.99212314553086312,
    -0.99149572117810613,
    -0.99083861195829424,
    -0.99015137040077016,
    -0.98943356052024084,
    -0.98868475754742948,
    -0.98790454769512428,
    -0.98709252795403407,
    -0.98624830591300755,
    -0.98537149959852037,
    -0.98446173732881453,
    -0.98351865757863273,
    -0.98254190885108060,
    -0.98153114955374011,
    -0.98048604787672134,
    -0.97940628167086268,
    -0.97829153832475854,
    -0.97714151463970571,
    -0.97595591670201175,
    -0.97473445975240267,
    -0.97347686805250693,
    -0.97218287474858180,
    -0.97085222173279244,
    -0.96948465950245923,
    -0.96807994701775995,
    -0.96663785155841657,
    -0.96515814857991567,
    -0.96364062156981213,
    -0.96208506190465148,
    -0.96049126870802028,
    -0.95885904871020022,
    -0.95718821610986096,
    -0.95547859243818370,
    -0.95373000642576114,
    -0.95194229387257359,
    -0.95011529752129488,
    -0.94824886693413736,
    -0.94634285837340291,
    -0.94439713468586665,
    -0.94241156519108306,
    -0.94038602557366972,
    -0.93832039777959288,
    -0.93621456991645081,
    -0.93406843615772579,
    -0.93188189665095364,
    -0.92965485742974006,
    -0.92738723032953670,
    -0.92507893290707565,
    -0.92272988836334924,
    -0.92034002547001242,
    -0.91790927849907750,
    -0.91543758715576504,
    -0.91292489651437059,
    -0.91037115695700429,
    -0.90777632411505890,
    -0.90514035881326160,
    -0.90246322701616568,
    -0.89974489977694004,
    -0.89698535318831659,
    -0.89418456833555902,
    -0.89134253125131987,
    -0.88845923287225700,
    -0.88553466899728501,
    -0.88256884024734191,
    -0.87956175202655626,
    -0.87651341448470527,
    -0.87342384248085931,
    -0.87029305554811391,
    -0.86712107785931522,
    -0.86390793819369048,
    -0.86065366990429997,
    -0.85735831088623216,
    -0.85402190354546863,
    -0.85064449476835028,
    -0.84722613589158088,
    -0.84376688267270860,
    -0.84026679526103044,
    -0.83672593816886874,
    -0.83314438024317262,
    -0.82952219463740140,
    -0.82585945878365000,
    -0.82215625436498041,
    -0.81841266728792581,
    -0.81462878765513741,
    -0.81080470973814659,
    -0.80694053195021761,
    -0.80303635681926869,
    -0.79909229096084140,
    -0.79510844505110053,
    -0.79108493379984836,
    -0.78702187592353942,
    -0.78291939411828302,
    -0.77877761503282274,
    -0.77459666924148338,
    -0.77037669121707682,
    -0.76611781930376009,
    -0.76182019568983915,
    -0.75748396638051364,
    -0.75310928117055814,
    -0.74869629361693660,
    -0.74424516101134708,
    -0.73975604435269476,
    -0.73522910831949155,
    -0.73066452124218126,
    -0.72606245507538963,
    -0.72142308537009892,
    -0.71674659124574710,
    -0.71203315536225203,
    -0.70728296389196110,
    -0.70249620649152708,
    -0.69767307627371123,
    -0.69281376977911470,
    -0.68791848694783933,
    -0.68298743109107923,
    -0.67802080886264452,
    -0.67301883023041848,
    -0.66798170844774970,
    -0.66290966002478060,
    -0.65780290469971374,
    -0.65266166541001750,
    -0.64748616826357239,
    -0.64227664250975951,
    -0.63703332051049250,
    -0.63175643771119423,
    -0.62644623261171975,
    -0.62110294673722640,
    -0.61572682460899264,
    -0.61031811371518640,
    -0.60487706448158435,
    -0.59940393024224289,
    -0.59389896721012195,
    -0.58836243444766254,
    -0.58279459383731885,
    -0.57719571005204581,
    -0.57156605052574283,
    -0.56590588542365442,
    -0.56021548761272844,
    -0.55449513263193255,
    -0.54874509866252945,
    -0.54296566649831149,
    -0.53715711951579512,
    -0.53131974364437562,
    -0.52545382733644269,
    -0.51955966153745702,
    -0.51363753965598858,
    -0.50768775753371660,
    -0.50171061341539188,
    -0.49570640791876146,
    -0.48967544400445616,
    -0.48361802694584103,
    -0.47753446429882916,
    -0.47142506587165888,
    -0.46529014369463474,
    -0.45913001198983233,
    -0.45294498714076728,
    -0.44673538766202847,
    -0.44050153416887580,
    -0.43424374934680256,
    -0.42796235792106274,
    -0.42165768662616330,
    -0.41533006417532166,
    -0.40897982122988867,
    -0.40260729036873709,
    -0.39621280605761594,
    -0.38979670461847080,
    -0.38335932419873035,
    -0.37690100474055934,
    -0.37042208795007823,
    -0.36392291726654966,
    -0.35740383783153215,
    -0.35086519645800121,
    -0.34430734159943802,
    -0.33773062331888622,
    -0.33113539325797683,
    -0.32452200460592186,
    -0.31789081206847668,
    -0.31124217183687180,
    -0.30457644155671404,
    -0.29789398029685782,
    -0.29119514851824668,
    -0.28448030804272558,
    -0.27774982202182432,
    -0.27100405490551254,
    -0.26424337241092676,
    -0.25746814149106979,
    -0.25067873030348318,
    -0.24387550817889302,
    -0.23705884558982973,
    -0.23022911411922218,
    -0.22338668642896688,
    -0.21653193622847263,
    -0.20966523824318119,
    -0.20278696818306470,
    -0.19589750271110015,
    -0.18899721941172186,
    -0.18208649675925220,
    -0.17516571408631148,
    -0.16823525155220746,
    -0.16129549011130526,
    -0.15434681148137811,
    -0.14738959811193994,
    -0.14042423315256017,
    -0.13345110042116160,
    -0.12647058437230197,
    -0.11948307006544001,
    -0.11248894313318663,
    -0.10548858974954199,
    -0.098482396598119202,
    -0.091470750840355391,
    -0.084454040083710884,
    -0.077432652349857283,
    -0.070406976042855179,
    -0.063377399917322290,
    -0.056344313046592790,
    -0.049308104790868627,
    -0.042269164765363603,
    -0.035227882808441023,
    -0.028184648949745694,
    -0.021139853378331088,
    -0.014093886410782463,
    -0.0070471384593367465,
    0.0,
    0.0070471384593367465,
    0.014093886410782463,
    0.021139853378331088,
    0.028184648949745694,
    0.035227882808441023,
    0.042269164765363603,
    0.049308104790868627,
    0.056344313046592790,
    0.063377399917322290,
    0.070406976042855179,
    0.077432652349857283,
    0.084454040083710884,
    0.091470750840355391,
    0.098482396598119202,
    0.10548858974954199,
    0.11248894313318663,
    0.11948307006544001,
    0.12647058437230197,
    0.13345110042116160,
    0.14042423315256017,
    0.14738959811193994,
    0.15434681148137811,
    0.16129549011130526,
    0.16823525155220746,
    0.17516571408631148,
    0.18208649675925220,
    0.18899721941172186,
    0.19589750271110015,
    0.20278696818306470,
    0.20966523824318119,
    0.21653193622847263,
    0.22338668642896688,
    0.23022911411922218,
    0.23705884558982973,
    0.24387550817889302,
    0.25067873030348318,
    0.25746814149106979,
    0.26424337241092676,
    0.27100405490551254,
    0.27774982202182432,
    0.28448030804272558,
    0.29119514851824668,
    0.29789398029685782,
    0.30457644155671404,
    0.31124217183687180,
    0.31789081206847668,
    0.32452200460592186,
    0.33113539325797683,
    0.33773062331888622,
    0.34430734159943802,
    0.35086519645800121,
    0.35740383783153215,
    0.36392291726654966,
    0.37042208795007823,
    0.37690100474055934,
    0.38335932419873035,
    0.38979670461847080,
    0.39621280605761594,
    0.40260729036873709,
    0.40897982122988867,
    0.41533006417532166,
    0.42165768662616330,
    0.42796235792106274,
    0.43424374934680256,
    0.44050153416887580,
    0.44673538766202847,
    0.45294498714076728,
    0.45913001198983233,
    0.46529014369463474,
    0.47142506587165888,
    0.47753446429882916,
    0.48361802694584103,
    0.48967544400445616,
    0.49570640791876146,
    0.50171061341539188,
    0.50768775753371660,
    0.51363753965598858,
    0.51955966153745702,
    0.52545382733644269,
    0.53131974364437562,
    0.53715711951579512,
    0.54296566649831149,
    0.54874509866252945,
    0.55449513263193255,
    0.56021548761272844,
    0.56590588542365442,
    0.57156605052574283,
    0.57719571005204581,
    0.58279459383731885,
    0.58836243444766254,
    0.59389896721012195,
    0.59940393024224289,
    0.60487706448158435,
    0.61031811371518640,
    0.61572682460899264,
    0.62110294673722640,
    0.62644623261171975,
    0.63175643771119423,
    0.63703332051049250,
    0.64227664250975951,
    0.64748616826357239,
    0.65266166541001750,
    0.65780290469971374,
    0.66290966002478060,
    0.66798170844774970,
    0.67301883023041848,
    0.67802080886264452,
    0.68298743109107923,
    0.68791848694783933,
    0.69281376977911470,
    0.69767307627371123,
    0.70249620649152708,
    0.70728296389196110,
    0.71203315536225203,
    0.71674659124574710,
    0.72142308537009892,
    0.72606245507538963,
    0.73066452124218126,
    0.73522910831949155,
    0.73975604435269476,
    0.74424516101134708,
    0.74869629361693660,
    0.75310928117055814,
    0.75748396638051364,
    0.76182019568983915,
    0.76611781930376009,
    0.77037669121707682,
    0.77459666924148338,
    0.77877761503282274,
    0.78291939411828302,
    0.78702187592353942,
    0.79108493379984836,
    0.79510844505110053,
    0.79909229096084140,
    0.80303635681926869,
    0.80694053195021761,
    0.81080470973814659,
    0.81462878765513741,
    0.81841266728792581,
    0.82215625436498041,
    0.82585945878365000,
    0.82952219463740140,
    0.83314438024317262,
    0.83672593816886874,
    0.84026679526103044,
    0.84376688267270860,
    0.84722613589158088,
    0.85064449476835028,
    0.85402190354546863,
    0.85735831088623216,
    0.86065366990429997,
    0.86390793819369048,
    0.86712107785931522,
    0.87029305554811391,
    0.87342384248085931,
    0.87651341448470527,
    0.87956175202655626,
    0.88256884024734191,
    0.88553466899728501,
    0.88845923287225700,
    0.89134253125131987,
    0.89418456833555902,
    0.89698535318831659,
    0.89974489977694004,
    0.90246322701616568,
    0.90514035881326160,
    0.90777632411505890,
    0.91037115695700429,
    0.91292489651437059,
    0.91543758715576504,
    0.91790927849907750,
    0.92034002547001242,
    0.92272988836334924,
    0.92507893290707565,
    0.92738723032953670,
    0.92965485742974006,
    0.93188189665095364,
    0.93406843615772579,
    0.93621456991645081,
    0.93832039777959288,
    0.94038602557366972,
    0.94241156519108306,
    0.94439713468586665,
    0.94634285837340291,
    0.94824886693413736,
    0.95011529752129488,
    0.95194229387257359,
    0.95373000642576114,
    0.95547859243818370,
    0.95718821610986096,
    0.95885904871020022,
    0.96049126870802028,
    0.96208506190465148,
    0.96364062156981213,
    0.96515814857991567,
    0.96663785155841657,
    0.96807994701775995,
    0.96948465950245923,
    0.97085222173279244,
    0.97218287474858180,
    0.97347686805250693,
    0.97473445975240267,
    0.97595591670201175,
    0.97714151463970571,
    0.97829153832475854,
    0.97940628167086268,
    0.98048604787672134,
    0.98153114955374011,
    0.98254190885108060,
    0.98351865757863273,
    0.98446173732881453,
    0.98537149959852037,
    0.98624830591300755,
    0.98709252795403407,
    0.98790454769512428,
    0.98868475754742948,
    0.98943356052024084,
    0.99015137040077016,
    0.99083861195829424,
    0.99149572117810613,
    0.99212314553086312,
    0.99272134428278862,
    0.99329078885168497,
    0.99383196321275502,
    0.99434536435672341,
    0.99483150280062100,
    0.99529090314881030,
    0.99572410469840719,
    0.99613166207931504,
    0.99651414591489027,
    0.99687214348526016,
    0.99720625937222196,
    0.99751711606347240,
    0.99780535449595727,
    0.99807163452493032,
    0.99831663531840739,
    0.99854105569716791,
    0.99874561446809511,
    0.99893105083081056,
    0.99909812496766760,
    0.99924761894334247,
    0.99938033802502358,
    0.99949711246718719,
    0.99959879967191068,
    0.99968628644831773,
    0.99976049092443205,
    0.99982236367978774,
    0.99987288812035761,
    0.99991308114467828,
    0.99994399620705438,
    0.99996673009848628,
    0.99998243035489160,
    0.99999229813625759,
    0.99999759637974846,
    0.99999967295673438,
};
const double kPattersonWeights8[] = {
    9.4571593395000705e-7,
    3.4545650716914913e-6,
    7.3662406910232167e-6,
    1.2579278188959274e-5,
    1.9021368190587582e-5,
    2.6637641233900090e-5,
    3.5375137205518959e-5,
    4.5186367412629614e-5,
    5.6031950785616425e-5,
    6.7877455473397242e-5,
    8.0689922801403529e-5,
    9.4436632253270553e-5,
    0.00010908554564574152,
    0.00012460620024149837,
    0.00014097030220410479,
    0.00015815183041113224,
    0.00017612676554508320,
    0.00019487264223664115,
    0.00021436809003421694,
    0.00023459246212392520,
    0.00025552558959523686,
    0.00027714765746518736,
    0.00029943917685091173,
    0.00032238102065286239,
    0.00034595449212990387,
    0.00037014140212225167,
    0.00039492413824687370,
    0.00042028571635536123,
    0.00044620981010140325,
    0.00047268075842926269,
    0.00049968355331280048,
    0.00052720381143165839,
    0.00055522773397730758,
    0.00058374205871497970,
    0.00061273400801222521,
    0.00064219123594850509,
    0.00067210177696010819,
    0.00070245399782757232,
    0.00073323655422476791,
    0.00076443835254388278,
    0.00079604851729755087,
    0.00082805636407722630,
    0.00086045137780852785,
    0.00089322319587932491,
    0.00092636159561311128,
    0.00095985648550693621,
    0.00099369789963876086,
    0.0010278759946636733,
    0.0010623810488534007,
    0.0010972034626819194,
    0.0011323337605159766,
    0.0011677625930285804,
    0.0012034807400126596,
    0.0012394791133287840,
    0.0012757487597734695,
    0.0013122808637022148,
    0.0013490667492835311,
    0.0013860978822967255,
    0.0014233658714172052,
    0.0014608624689589099,
    0.0014985795710645664,
    0.0015365092173512892,
    0.0015746435900321217,
    0.0016129750125439342,
    0.0016514959477191457,
    0.0016901989955434602,
    0.0017290768905446161,
    0.0017681224988583889,
    0.0018073288150180893,
    0.0018466889585128254,
    0.0018861961701580848,
    0.0019258438083199355,
    0.0019656253450315055,
    0.0020055343620375117,
    0.0020455645467995829,
    0.0020857096884920394,
    0.0021259636740147253,
    0.0021663204840464914,
    0.0022067741891600333,
    0.0022473189460160339,
    0.0022879489936519597,
    0.0023286586498784274,
    0.0023694423077938050,
    0.0024102944324256342,
    0.0024512095575055648,
    0.0024921822823827693,
    0.0025332072690792533,
    0.0025742792394890889,
    0.0026153929727223611,
    0.0026565433025935283,
    0.0026977251152529459,
    0.0027389333469594754,
    0.0027801629819913944,
    0.0028214090506922221,
    0.0028626666276475787,
    0.0029039308299887837,
    0.0029451968158185758,
    0.0029864597827540829,
    0.0030277149665819854,
    0.0030689576400206925,
    0.0031101831115842755,
    0.0031513867245428794,
    0.0031925638559743474,
    0.0032337099159018434,
    0.0032748203465123397,
    0.0033158906214509439,
    0.0033569162451861676,
    0.0033978927524413867,
    0.0034388157076879059,
    0.0034796807046952115,
    0.0035204833661341792,
    0.0035612193432291936,
    0.0036018843154553243,
    0.0036424739902769035,
    0.0036829841029240391,
    0.0037234104162037955,
    0.0037637487203429634,
    0.0038039948328595283,
    0.0038441445984601316,
    0.0038841938889609956,
    0.0039241386032299577,
    0.0039639746671474246,
    0.0040036980335842169,
    0.0040433046823944300,
    0.0040827906204215784,
    0.0041221518815164340,
    0.0041613845265650975,
    0.0042004846435259663,
    0.0042394483474743818,
    0.0042782717806538448,
    0.0043169511125327948,
    0.0043554825398660434,
    0.0043938622867600420,
    0.0044320866047412471,
    0.0044701517728269273,
    0.0045080540975978216,
    0.0045457899132721329,
    0.0045833555817803942,
    0.0046207474928408069,
    0.0046579620640346975,
    0.0046949957408817905,
    0.0047318449969150326,
    0.0047685063337547493,
    0.0048049762811819415,
    0.0048412513972105714,
    0.0048773282681587057,
    0.0049132035087184190,
    0.0049488737620243749,
    0.0049843356997210303,
    0.0050195860220284204,
    0.0050546214578065013,
    0.0050894387646180399,
    0.0051240347287900535,
    0.0051584061654738108,
    0.0051925499187034161,
    0.0052264628614530060,
    0.0052601418956925931,
    0.0052935839524425990,
    0.0053267859918271186,
    0.0053597450031259668,
    0.0053924580048255559,
    0.0054249220446686570,
    0.0054571341997030986,
    0.0054890915763294562,
    0.0055207913103477871,
    0.0055522305670034633,
    0.0055834065410321564,
    0.0056143164567040247,
    0.0056449575678671537,
    0.0056753271579902983,
    0.0057054225402049733,
    0.0057352410573469372,
    0.0057647800819971114,
    0.0057940370165219763,
    0.0058230092931134806,
    0.0058516943738285016,
    0.0058800897506278880,
    0.0059081929454151179,
    0.0059360015100745983,
    0.0059635130265096350,
    0.0059907251066800947,
    0.0060176353926397813,
    0.0060442415565735463,
    0.0060705413008341498,
    0.0060965323579788869,
    0.0061222124908059929,
    0.0061475794923908379,
    0.0061726311861219192,
    0.0061973654257366600,
    0.0062217800953570176,
    0.0062458731095249075,
    0.0062696424132374422,
    0.0062930859819819884,
    0.0063162018217710394,
    0.0063389879691769017,
    0.0063614424913661915,
    0.0063835634861341371,
    0.0064053490819386810,
    0.0064267974379343744,
    0.0064479067440060573,
    0.0064686752208023148,
    0.0064891011197686996,
    0.0065091827231807120,
    0.0065289183441765244,
    0.0065483063267894406,
    0.0065673450459800764,
    0.0065860329076682494,
    0.0066043683487645650,
    0.0066223498372016851,
    0.0066399758719652653,
    0.0066572449831245471,
    0.0066741557318625900,
    0.0066907067105061301,
    0.0067068965425550493,
    0.0067227238827114411,
    0.0067381874169082580,
    0.0067532858623375253,
    0.0067680179674781068,
    0.0067823825121230075,
    0.0067963783074061980,
    0.0068100041958289469,
    0.0068232590512856457,
    0.0068361417790891122,
    0.0068486513159953581,
    0.0068607866302278070,
    0.0068725467215009483,
    0.0068839306210434147,
    0.0068949373916204683,
    0.0069055661275558835,
    0.0069158159547532143,
    0.0069256860307164316,
    0.0069351755445699205,
    0.0069442837170778255,
    0.0069530098006627306,
    0.0069613530794236655,
    0.0069693128691534254,
    0.0069768885173551955,
    0.0069840794032584693,
    0.0069908849378342521,
    0.0069973045638095399,
    0.0070033377556810657,
    0.0070089840197283044,
    0.0070142428940257292,
    0.0070191139484543117,
    0.0070235967847122591,
    0.0070276910363249821,
    0.0070313963686542871,
    0.0070347124789067877,
    0.0070376390961415305,
    0.0070401759812768307,
    0.0070423229270963121,
    0.0070440797582541505,
    0.0070454463312795148,
    0.0070464225345802042,
    0.0070470082884454801,
    0.0070472035450480897,
    0.0070470082884454801,
    0.0070464225345802042,
    0.0070454463312795148,
    0.0070440797582541505,
    0.0070423229270963121,
    0.0070401759812768307,
    0.0070376390961415305,
    0.0070347124789067877,
    0.0070313963686542871,
    0.0070276910363249821,
    0.0070235967847122591,
    0.0070191139484543117,
    0.0070142428940257292,
    0.0070089840197283044,
    0.0070033377556810657,
    0.0069973045638095399,
    0.0069908849378342521,
    0.0069840794032584693,
    0.0069768885173551955,
    0.0069693128691534254,
    0.0069613530794236655,
    0.0069530098006627306,
    0.0069442837170778255,
    0.0069351755445699205,
    0.0069256860307164316,
    0.0069158159547532143,
    0.0069055661275558835,
    0.0068949373916204683,
    0.0068839306210434147,
    0.0068725467215009483,
    0.0068607866302278070,
    0.0068486513159953581,
    0.0068361417790891122,
    0.0068232590512856457,
    0.0068100041958289469,
    0.0067963783074061980,
    0.0067823825121230075,
    0.0067680179674781068,
    0.0067532858623375253,
    0.0067381874169082580,
    0.0067227238827114411,
    0.0067068965425550493,
    0.0066907067105061301,
    0.0066741557318625900,
    0.0066572449831245471,
    0.0066399758719652653,
    0.0066223498372016851,
    0.0066043683487645650,
    0.0065860329076682494,
    0.0065673450459800764,
    0.0065483063267894406,
    0.0065289183441765244,
    0.0065091827231807120,
    0.0064891011197686996,
    0.0064686752208023148,
    0.0064479067440060573,
    0.0064267974379343744,
    0.0064053490819386810,
    0.0063835634861341371,
    0.0063614424913661915,
    0.0063389879691769017,
    0.0063162018217710394,
    0.0062930859819819884,
    0.0062696424132374422,
    0.0062458731095249075,
    0.0062217800953570176,
    0.0061973654257366600,
    0.0061726311861219192,
    0.0061475794923908379,
    0.0061222124908059929,
    0.0060965323579788869,
    0.0060705413008341498,
    0.0060442415565735463,
    0.0060176353926397813,
    0.0059907251066800947,
    0.0059635130265096350,
    0.0059360015100745983,
    0.0059081929454151179,
    0.0058800897506278880,
    0.0058516943738285016,
    0.0058230092931134806,
    0.0057940370165219763,
    0.0057647800819971114,
    0.0057352410573469372,
    0.0057054225402049733,
    0.0056753271579902983,
    0.0056449575678671537,
    0.0056143164567040247,
    0.0055834065410321564,
    0.0055522305670034633,
    0.0055207913103477871,
    0.0054890915763294562,
    0.0054571341997030986,
    0.0054249220446686570,
    0.0053924580048255559,
    0.0053597450031259668,
    0.0053267859918271186,
    0.0052935839524425990,
    0.0052601418956925931,
    0.0052264628614530060,
    0.0051925499187034161,
    0.0051584061654738108,
    0.0051240347287900535,
    0.0050894387646180399,
    0.0050546214578065013,
    0.0050195860220284204,
    0.0049843356997210303,
    0.0049488737620243749,
    0.0049132035087184190,
    0.0048773282681587057,
    0.0048412513972105714,
    0.0048049762811819415,
    0.0047685063337547493,
    0.0047318449969150326,
    0.0046949957408817905,
    0.0046579620640346975,
    0.0046207474928408069,
    0.0045833555817803942,
    0.0045457899132721329,
    0.0045080540975978216,
    0.0044701517728269273,
    0.0044320866047412471,
    0.0043938622867600420,
    0.0043554825398660434,
    0.0043169511125327948,
    0.0042782717806538448,
    0.0042394483474743818,
    0.0042004846435259663,
    0.0041613845265650975,
    0.0041221518815164340,
    0.0040827906204215784,
    0.0040433046823944300,
    0.0040036980335842169,
    0.0039639746671474246,
    0.0039241386032299577,
    0.0038841938889609956,
    0.0038441445984601316,
    0.0038039948328595283,
    0.0037637487203429634,
    0.0037234104162037955,
    0.0036829841029240391,
    0.0036424739902769035,
    0.0036018843154553243,
    0.0035612193432291936,
    0.0035204833661341792,
    0.0034796807046952115,
    0.0034388157076879059,
    0.0033978927524413867,
    0.0033569162451861676,
    0.0033158906214509439,
    0.0032748203465123397,
    0.0032337099159018434,
    0.0031925638559743474,
    0.0031513867245428794,
    0.0031101831115842755,
    0.0030689576400206925,
    0.0030277149665819854,
    0.0029864597827540829,
    0.0029451968158185758,
    0.0029039308299887837,
    0.0028626666276475787,
    0.0028214090506922221,
    0.0027801629819913944,
    0.0027389333469594754,
    0.0026977251152529459,
    0.0026565433025935283,
    0.0026153929727223611,
    0.0025742792394890889,
    0.0025332072690792533,
    0.0024921822823827693,
    0.0024512095575055648,
    0.0024102944324256342,
    0.0023694423077938050,
    0.0023286586498784274,
    0.0022879489936519597,
    0.0022473189460160339,
    0.0022067741891600333,
    0.0021663204840464914,
    0.0021259636740147253,
    0.0020857096884920394,
    0.0020455645467995829,
    0.0020055343620375117,
    0.0019656253450315055,
    0.0019258438083199355,
    0.0018861961701580848,
    0.0018466889585128254,
    0.0018073288150180893,
    0.0017681224988583889,
    0.0017290768905446161,
    0.0016901989955434602,
    0.0016514959477191457,
    0.0016129750125439342,
    0.0015746435900321217,
    0.0015365092173512892,
    0.0014985795710645664,
    0.0014608624689589099,
    0.0014233658714172052,
    0.0013860978822967255,
    0.0013490667492835311,
    0.0013122808637022148,
    0.0012757487597734695,
    0.0012394791133287840,
    0.0012034807400126596,
    0.0011677625930285804,
    0.0011323337605159766,
    0.0010972034626819194,
    0.0010623810488534007,
    0.0010278759946636733,
    0.00099369789963876086,
    0.00095985648550693621,
    0.00092636159561311128,
    0.00089322319587932491,
    0.00086045137780852785,
    0.00082805636407722630,
    0.00079604851729755087,
    0.00076443835254388278,
    0.00073323655422476791,
    0.00070245399782757232,
    0.00067210177696010819,
    0.00064219123594850509,
    0.00061273400801222521,
    0.00058374205871497970,
    0.00055522773397730758,
    0.00052720381143165839,
    0.00049968355331280048,
    0.00047268075842926269,
    0.00044620981010140325,
    0.00042028571635536123,
    0.00039492413824687370,
    0.00037014140212225167,
    0.00034595449212990387,
    0.00032238102065286239,
    0.00029943917685091173,
    0.00027714765746518736,
    0.00025552558959523686,
    0.00023459246212392520,
    0.00021436809003421694,
    0.00019487264223664115,
    0.00017612676554508320,
    0.00015815183041113224,
    0.00014097030220410479,
    0.00012460620024149837,
    0.00010908554564574152,
    9.4436632253270553e-5,
    8.0689922801403529e-5,
    6.7877455473397242e-5,
    5.6031950785616425e-5,
    4.5186367412629614e-5,
    3.5375137205518959e-5,
    2.6637641233900090e-5,
    1.9021368190587582e-5,
    1.2579278188959274e-5,
    7.3662406910232167e-6,
    3.4545650716914913e-6,
    9.4571593395000705e-7,
};

const double* kPattersonNodes[] = {
    kPattersonNodes0,
    kPattersonNodes1,
    kPattersonNodes2,
    kPattersonNodes3,
    kPattersonNodes4,
    kPattersonNodes5,
    kPattersonNodes6,
    kPattersonNodes7,
    kPattersonNodes8,
};
const double* kPattersonWeights[] = {
    kPattersonWeights0,
    kPattersonWeights1,
    kPattersonWeights2,
    kPattersonWeights3,
    kPattersonWeights4,
    kPattersonWeights5,
    kPattersonWeights6,
    kPattersonWeights7,
    kPattersonWeights8,
};

}  // namespace cdpf::quad::detail
