// Reference values computed with mpmath at 50 significant digits.

/// (2ν, x, J_ν(x))
pub const J_TABLE: &[(i64, f64, f64)] = &[
    (1, 0.01, 0.07978712627933422),
    (1, 0.5, 0.540973789934528),
    (1, 1.0, 0.6713967071418031),
    (1, 2.5, 0.3020049060623657),
    (1, 5.0, -0.3421679847981618),
    (1, 7.3, 0.2511427147490215),
    (1, 12.0, -0.12358853595594195),
    (1, 30.0, -0.1439296533703999),
    (1, 100.0, -0.04040213271625212),
    (1, 500.0, -0.016691259174642977),
    (3, 0.01, 0.0002659588606619177),
    (3, 0.5, 0.0917016996256513),
    (3, 1.0, 0.240297839123427),
    (3, 2.5, 0.5250802646640031),
    (3, 5.0, -0.16965130614474075),
    (3, 7.3, -0.1209530109736306),
    (3, 12.0, -0.20466344849652968),
    (3, 30.0, -0.027267945711177688),
    (3, 100.0, -0.0692071127958906),
    (3, 500.0, 0.0315045535571148),
    (5, 0.01, 5.319192410955081e-07),
    (5, 0.5, 0.009236407819379724),
    (5, 1.0, 0.04949681022847794),
    (5, 2.5, 0.3280914115344381),
    (5, 5.0, 0.24037720111131736),
    (5, 7.3, -0.3008494315874998),
    (5, 12.0, 0.07242267383180952),
    (5, 30.0, 0.14120285879928213),
    (5, 100.0, 0.038325919332375405),
    (5, 500.0, 0.016880286495985667),
    (7, 0.01, 7.598858363056526e-10),
    (7, 0.5, 0.0006623785681459423),
    (7, 1.0, 0.0071862120189627),
    (7, 2.5, 0.13110255840487303),
    (7, 5.0, 0.4100285072560581),
    (7, 7.3, -0.08510824353835557),
    (7, 12.0, 0.234839562593117),
    (7, 30.0, 0.05080175551105804),
    (7, 100.0, 0.07112340876250937),
    (7, 500.0, -0.03133575069215495),
    (9, 0.01, 8.443184487426839e-13),
    (9, 0.5, 3.689213466346855e-05),
    (9, 1.0, 0.000806673904260961),
    (9, 2.5, 0.03899575199920642),
    (9, 5.0, 0.333662709047164),
    (9, 7.3, 0.2192387870986657),
    (9, 12.0, 0.06456707101417539),
    (9, 30.0, -0.12934911584670192),
    (9, 100.0, -0.03334728071899975),
    (9, 500.0, -0.017318987005675836),
    (15, 0.01, 3.936222859050366e-22),
    (15, 0.5, 2.158546507176618e-09),
    (15, 1.0, 3.8219741213480424e-07),
    (15, 2.5, 0.0003155051789959852),
    (15, 5.0, 0.031940778293484684),
    (15, 7.3, 0.20787032862414237),
    (15, 12.0, -0.06865311679776996),
    (15, 30.0, 0.13142029812318964),
    (15, 100.0, 0.07739982782510009),
    (15, 500.0, -0.03055596953079951),
    (21, 0.01, 5.803075157264358e-32),
    (21, 0.5, 3.9855051571881206e-14),
    (21, 1.0, 5.678187477634622e-11),
    (21, 2.5, 7.633026211705018e-07),
    (21, 5.0, 0.0007267526897414871),
    (21, 7.3, 0.019904598571656863),
    (21, 12.0, 0.29469968409768454),
    (21, 30.0, -0.06349736950254554),
    (21, 100.0, -0.0015611238546507794),
    (21, 500.0, 0.0200548788231233),
    (41, 0.01, 6.084643833838697e-67),
    (41, 0.5, 4.09127045948795e-32),
    (41, 1.0, 6.014290829258685e-26),
    (41, 2.5, 8.135655715152806e-18),
    (41, 5.0, 9.683738209818927e-12),
    (41, 7.3, 1.619573519368831e-08),
    (41, 12.0, 0.00014133161163154578),
    (41, 30.0, -0.06429251291919125),
    (41, 100.0, 0.08064754863072786),
    (41, 500.0, -0.028113617503811066),
];

/// (2ν, x, e^{-x} I_ν(x))
pub const I_SCALED_TABLE: &[(i64, f64, f64)] = &[
    (1, 1e-06, 0.0007978837629188365),
    (1, 0.01, 0.078995864259768),
    (1, 0.5, 0.3566358348374589),
    (1, 1.0, 0.3449513138882446),
    (1, 2.5, 0.2506131788815119),
    (1, 5.0, 0.17840431170432103),
    (1, 12.0, 0.11516471648609754),
    (1, 30.0, 0.07283656203947193),
    (1, 100.0, 0.03989422804014327),
    (1, 800.0, 0.014104739588693908),
    (1, 5000.0, 0.005641895835477563),
    (3, 1e-06, 2.659612543062611e-10),
    (3, 0.01, 0.0002633177920856283),
    (3, 0.5, 0.05847166258313577),
    (3, 1.0, 0.1079819330263761),
    (3, 2.5, 0.1537680539699153),
    (3, 5.0, 0.142739649185369),
    (3, 12.0, 0.105567656787618),
    (3, 30.0, 0.07040867663815621),
    (3, 100.0, 0.03949528575974184),
    (3, 800.0, 0.01408710866420804),
    (3, 5000.0, 0.005640767456310467),
    (5, 1e-06, 5.319225086125069e-17),
    (5, 0.01, 5.266340795048464e-07),
    (5, 0.5, 0.005805859338644327),
    (5, 1.0, 0.021005514809116315),
    (5, 2.5, 0.06609151411761358),
    (5, 5.0, 0.09276052219309963),
    (5, 12.0, 0.08877280228919304),
    (5, 30.0, 0.06579569437565631),
    (5, 100.0, 0.03870936946735101),
    (5, 800.0, 0.014051912931203126),
    (5, 5000.0, 0.005638511375003777),
    (7, 1e-06, 7.598892980178549e-24),
    (7, 0.01, 7.523332051141533e-10),
    (7, 0.5, 0.000413069196692499),
    (7, 1.0, 0.0029543589807945326),
    (7, 2.5, 0.02158502573468814),
    (7, 5.0, 0.04997912699226937),
    (7, 12.0, 0.0685789891671209),
    (7, 30.0, 0.05944272757554682),
    (7, 100.0, 0.03755981728637429),
    (7, 800.0, 0.013999284208388021),
    (7, 5000.0, 0.005635128944935464),
    (9, 1e-06, 8.443214422420525e-31),
    (9, 0.01, 8.359249390921355e-13),
    (9, 0.5, 2.2890584949340592e-05),
    (9, 1.0, 0.000325001943554587),
    (9, 2.5, 0.0056534420604867795),
    (9, 5.0, 0.022789744403922504),
    (9, 12.0, 0.04876839194170585),
    (9, 30.0, 0.051925724608028724),
    (9, 100.0, 0.03608018225730481),
    (9, 800.0, 0.013929419194379731),
    (9, 5000.0, 0.005630622194480867),
    (15, 1e-06, 3.936230499962885e-52),
    (15, 0.01, 3.897079711133367e-22),
    (15, 0.5, 1.3286202124935167e-09),
    (15, 1.0, 1.4912145830857796e-07),
    (15, 2.5, 3.7408773894113186e-05),
    (15, 5.0, 0.0009416496280050473),
    (15, 12.0, 0.01095072487920414),
    (15, 30.0, 0.028333525593679937),
    (15, 100.0, 0.030112847382397227),
    (15, 800.0, 0.013619318131618626),
    (15, 5000.0, 0.005610386382244426),
    (21, 1e-06, 5.803081969575194e-74),
    (21, 0.01, 5.745358574449089e-32),
    (21, 0.5, 2.4437497326707473e-14),
    (21, 1.0, 2.181713152171502e-11),
    (21, 2.5, 8.222122895724554e-08),
    (21, 5.0, 1.453876573508707e-05),
    (21, 12.0, 0.0012900532956593232),
    (21, 30.0, 0.011509519965640754),
    (21, 100.0, 0.022965008520541064),
    (21, 800.0, 0.01316706778866119),
    (21, 5000.0, 0.005580168950961989),
    (41, 1e-06, 6.084644824362438e-149),
    (41, 0.01, 6.02411462566751e-67),
    (41, 0.5, 2.4959502069323476e-32),
    (41, 1.0, 2.2645912068548536e-26),
    (41, 2.5, 7.722910028951156e-19),
    (41, 5.0, 1.1670631087177164e-13),
    (41, 12.0, 2.5022527895405083e-08),
    (41, 30.0, 7.65812775895357e-05),
    (41, 100.0, 0.004870052418599917),
    (41, 800.0, 0.010846701457393897),
    (41, 5000.0, 0.0054098210142237415),
];

/// (2ν, w, H_ν(w)) with H_ν(w) = 0F1(;ν+1;w/4)/Γ(ν+1)
pub const H_TABLE: &[(i64, f64, f64)] = &[
    (1, -2500.0, -0.0059211663777849225),
    (1, -900.0, -0.037162476701931),
    (1, -399.0, 0.05097917930563457),
    (1, -100.0, -0.06138620879877226),
    (1, -10.0, -0.0073803974818267976),
    (1, -1.0, 0.949498328972575),
    (1, -1e-08, 1.1283791652148807),
    (1, 0.0, 1.1283791670955126),
    (1, 1e-08, 1.1283791689761444),
    (1, 1.0, 1.3260725440534449),
    (1, 10.0, 4.20732393538873),
    (1, 100.0, 1242.7102538186732),
    (1, 899.0, 197760440956.5739),
    (1, 2500.0, 5.85031370598258e+19),
    (1, 40000.0, 2.0384095654829387e+84),
    (3, -2500.0, -0.0008758149839065443),
    (3, -900.0, -0.0004693702205541295),
    (3, -399.0, -0.0021810285033440403),
    (3, -100.0, 0.017708092486281465),
    (3, -10.0, 0.22415147574148808),
    (3, -1.0, 0.6796649261945972),
    (3, -1e-08, 0.7522527773114223),
    (3, 0.0, 0.7522527780636751),
    (3, 1e-08, 0.7522527788159278),
    (3, 1.0, 0.8302149948411894),
    (3, 10.0, 1.829033192832999),
    (3, 100.0, 223.68784671192788),
    (3, 899.0, 12751403480.144102),
    (3, 2500.0, 2.2933229727451715e+18),
    (3, 40000.0, 2.028217517655524e+82),
    (7, -2500.0, 1.4307916152227916e-06),
    (7, -900.0, 3.886505739307233e-06),
    (7, -399.0, 8.234198333622674e-06),
    (7, -100.0, -0.0003565303093384808),
    (7, -10.0, 0.04778245414102834),
    (7, -1.0, 0.08130270799444474),
    (7, -1e-08, 0.08597174601665793),
    (7, 0.0, 0.08597174606442),
    (7, 1e-08, 0.08597174611218208),
    (7, 1.0, 0.09085790769832709),
    (7, 10.0, 0.14610361867750715),
    (7, 100.0, 5.31879993347399),
    (7, 899.0, 47894909.16881305),
    (7, 2500.0, 3316912579747742.5),
    (7, 40000.0, 1.9780178600875716e+78),
    (9, -2500.0, -3.782623343680639e-09),
    (9, -900.0, -6.597095921263281e-07),
    (9, -399.0, 5.741218867105272e-06),
    (9, -100.0, -0.00019063159935249846),
    (9, -10.0, 0.011918218022390242),
    (9, -1.0, 0.018252946813092905),
    (9, -1e-08, 0.019104832450075986),
    (9, 0.0, 0.01910483245876),
    (9, 1e-08, 0.019104832467444016),
    (9, 1.0, 0.01999012088999298),
    (9, 10.0, 0.029658797233766982),
    (9, 100.0, 0.7068535833148918),
    (9, 899.0, 2790553.395730818),
    (9, 2500.0, 122386960211225.23),
    (9, 40000.0, 1.938755677615041e+76),
    (15, -2500.0, 3.557338993571511e-12),
    (15, -900.0, 1.9859943339748546e-10),
    (15, -399.0, -4.885494807699808e-09),
    (15, -100.0, 1.6376660544955235e-06),
    (15, -10.0, 5.284662701481043e-05),
    (15, -1.0, 6.918512175935226e-05),
    (15, -1e-08, 7.12534543706888e-05),
    (15, 0.0, 7.125345439164569e-05),
    (15, 1e-08, 7.125345441260259e-05),
    (15, 1.0, 7.337693913525396e-05),
    (15, 10.0, 9.519907224273245e-05),
    (15, 100.0, 0.0009611065811946521),
    (15, 899.0, 451.7646587404927),
    (15, 2500.0, 5449935394.374314),
    (15, 40000.0, 1.7715142520800937e+70),
];

/// (2ν, first zeros of J_ν)
pub const ZEROS: &[(i64, [f64; 6])] = &[
    (1, [3.141592653589793, 6.283185307179586, 9.42477796076938, 12.566370614359172, 15.707963267948966, 18.84955592153876]),
    (3, [4.493409457909064, 7.725251836937707, 10.904121659428899, 14.066193912831473, 17.22075527193077, 20.37130295928756]),
    (7, [6.98793200050052, 10.417118547379365, 13.698023153249249, 16.92362128521384, 20.12180617445382, 23.304246988939653]),
    (9, [8.182561452571242, 11.70490715457039, 15.03966470761652, 18.30125595954199, 21.525417733399944, 24.727565547835034]),
    (21, [15.033469303743438, 19.02585353612776, 22.662720658136056, 26.1427676433791, 29.534634107843925, 32.87053459768754]),
];
