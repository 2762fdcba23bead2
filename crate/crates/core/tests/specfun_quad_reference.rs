use bkm_core::specfun::{bessel, BesselKind, Order};
use bkm_core::Qd;
use num_traits::Float;

const CASES: &[(BesselKind, u32, f64, [f64; 4])] = &[
    (BesselKind::J, 0, 0.05, [0.9993750976494686, -5.47464743164082e-17, 1.8167409842825586e-33, -1.2066645616751087e-49]),
    (BesselKind::J, 0, 0.7, [0.8812008886074053, -1.2779090019285377e-17, -1.7564585635392823e-34, -4.45108620873263e-51]),
    (BesselKind::J, 0, 1.9, [0.28181855937438555, -2.4270236495879533e-17, 9.791913246197164e-34, -1.3676525132748015e-50]),
    (BesselKind::J, 0, 2.5, [-0.048383776468198, 1.272741446544498e-18, -3.281090669172433e-35, -1.6824509230351838e-51]),
    (BesselKind::J, 0, 6.0, [0.15064525725099692, 9.335436867992133e-18, 5.372111381058232e-34, -1.5981006654121373e-50]),
    (BesselKind::J, 0, 15.0, [-0.014224472826780772, -7.591113698204674e-19, -3.2781160767188514e-35, -2.495962524928113e-51]),
    (BesselKind::J, 0, 30.0, [-0.08636798358104021, 2.3354273125041886e-21, 1.570343756507003e-37, 4.613397675376413e-54]),
    (BesselKind::J, 1, 0.05, [0.17833808240219742, 4.753563207964758e-18, 1.9787776171523524e-34, 4.179520968987346e-51]),
    (BesselKind::J, 1, 0.7, [0.6143610667912651, -4.988415420089533e-17, -1.516332708576299e-33, -5.794788384807194e-50]),
    (BesselKind::J, 1, 1.9, [0.5477623036828648, -5.4815858248900425e-17, 2.941875359970665e-33, 6.742707014505356e-50]),
    (BesselKind::J, 1, 2.5, [0.3020049060623657, -4.318729729195936e-18, 2.4706112303799156e-35, 1.5166379959523396e-51]),
    (BesselKind::J, 1, 6.0, [-0.09101540952306732, -1.989197282125591e-18, 1.75664261768658e-34, -3.497926108669729e-51]),
    (BesselKind::J, 1, 15.0, [0.13396768882243934, 5.8877169576220594e-18, -2.5501946204380086e-34, 1.6633413167165565e-52]),
    (BesselKind::J, 1, 30.0, [-0.1439296533703999, 6.7928025759448366e-18, -3.271855788122116e-34, -1.146493435555902e-52]),
    (BesselKind::J, 2, 0.05, [0.0249921883137597, -2.43759395010026e-19, -8.900942570512944e-37, -2.172445529014891e-53]),
    (BesselKind::J, 2, 0.7, [0.32899574154005895, -2.0626597364367202e-17, -3.306930593884573e-34, -1.7443381215164623e-50]),
    (BesselKind::J, 2, 1.9, [0.5811570727134341, -1.1530948389367256e-17, -4.798544573619123e-34, -1.5641461746024275e-50]),
    (BesselKind::J, 2, 2.5, [0.49709410246427405, -7.772027537603235e-18, -3.9504726300337525e-34, 4.115205021359053e-50]),
    (BesselKind::J, 2, 6.0, [-0.27668385812756563, 2.1297237906088455e-17, -1.335029194028195e-33, 8.407284575334694e-50]),
    (BesselKind::J, 2, 15.0, [0.20510403861352275, 1.224540777001989e-17, -2.772714477887823e-34, -1.4182118051031829e-50]),
    (BesselKind::J, 2, 30.0, [-0.11875106261662294, 1.1974021631128114e-18, 1.7255397627595738e-36, -6.404997348836183e-53]),
    (BesselKind::J, 3, 0.05, [0.0029727968749101476, -1.893469486925548e-19, -2.2897794430051125e-36, 8.71677732054846e-53]),
    (BesselKind::J, 3, 0.7, [0.1482635083201016, 9.373083581923587e-18, 2.7413941978042258e-34, -1.7636718561959772e-50]),
    (BesselKind::J, 3, 1.9, [0.4754309186530739, 1.0655489664762927e-17, -1.916081582108437e-35, 8.373119112132933e-52]),
    (BesselKind::J, 3, 2.5, [0.5250802646640031, -3.0735595726129466e-18, -1.8439917600996195e-35, -7.211793304443547e-53]),
    (BesselKind::J, 3, 6.0, [-0.3279303108617882, -1.8618322511029386e-17, -6.863785880185215e-34, -1.8679514542772883e-50]),
    (BesselKind::J, 3, 15.0, [0.16543669516213785, 7.047743082289602e-18, -2.779876096994043e-34, -7.117493729122003e-52]),
    (BesselKind::J, 3, 30.0, [-0.027267945711177688, 1.5488927410942385e-19, -3.363473975842559e-36, -1.0442295015895514e-52]),
    (BesselKind::J, 4, 0.05, [0.00031243490091938445, 1.905378570898511e-20, -1.325900171363194e-38, -6.537232468066854e-55]),
    (BesselKind::J, 4, 0.7, [0.058786944364191705, 5.935023014126829e-19, -1.517217987405795e-36, 7.418984395372381e-53]),
    (BesselKind::J, 4, 1.9, [0.3299257276923872, 1.1512741445754404e-17, 3.5208750301728928e-34, 1.442911372016291e-50]),
    (BesselKind::J, 4, 2.5, [0.44605905843961724, -1.3041478599752868e-17, -6.298942937006783e-34, 2.4982138137575703e-50]),
    (BesselKind::J, 4, 6.0, [-0.24287320996018547, -2.2363575659626486e-18, 1.733370971837867e-34, 8.368425770674411e-51]),
    (BesselKind::J, 4, 15.0, [0.04157167797525047, 2.7387771010184808e-18, -8.764532986142935e-35, 5.2378056156170084e-51]),
    (BesselKind::J, 4, 30.0, [0.07845124607326535, -5.473623739564099e-18, -2.1836421318098853e-34, -1.7618505053546619e-50]),
    (BesselKind::J, 5, 0.05, [2.9730092411405302e-05, 1.6812641681719503e-21, -1.3623054546605125e-38, 1.002820986628497e-54]),
    (BesselKind::J, 5, 0.7, [0.021053968866313298, -1.4729058919518733e-18, -7.170439764441488e-35, 5.3256074904921505e-51]),
    (BesselKind::J, 5, 1.9, [0.20291809419040988, -2.829686579854018e-18, 7.040261207823866e-35, -2.0991693798981175e-51]),
    (BesselKind::J, 5, 2.5, [0.3280914115344381, -1.0471772004191165e-17, -2.0090840897597345e-34, -6.948708935790054e-51]),
    (BesselKind::J, 5, 6.0, [-0.0729497459078268, 6.557823834425354e-18, 2.515184219769756e-34, -5.841831162716713e-51]),
    (BesselKind::J, 5, 15.0, [-0.10088034979001177, -1.7026107796012475e-18, 6.82894566519641e-36, 2.2586893576434344e-52]),
    (BesselKind::J, 5, 30.0, [0.14120285879928213, -6.777313648533894e-18, -3.426263315797937e-35, -2.1008238372863667e-51]),
    (BesselKind::J, 8, 0.05, [1.6274007267418995e-08, 1.424854140351243e-24, -5.993837976843258e-41, 4.6905294502878243e-57]),
    (BesselKind::J, 8, 0.7, [0.0006100970079583509, 3.163455496647651e-20, 1.912886223724518e-36, -1.367670594183497e-52]),
    (BesselKind::J, 8, 1.9, [0.028253451167486794, -7.316864843811714e-19, -4.2499585011615545e-36, -2.4811011128277963e-52]),
    (BesselKind::J, 8, 2.5, [0.07378188005425523, -6.213647390478782e-19, -1.6488346704088897e-35, -7.672693357692543e-52]),
    (BesselKind::J, 8, 6.0, [0.35764159478096075, 1.645564877007098e-17, 6.352735135045208e-34, -2.2715967968025716e-50]),
    (BesselKind::J, 8, 15.0, [-0.11917898110329952, -3.5515419841151804e-18, 2.6110645838217994e-34, 8.833850686731978e-51]),
    (BesselKind::J, 8, 30.0, [-0.052609000321320355, 2.9602525433549445e-18, -1.8915533782858036e-35, 6.5716616199707316e-52]),
    (BesselKind::J, 13, 0.05, [2.062723670552872e-14, -1.4459760429850281e-30, 5.069328243231235e-47, 1.0175607825396914e-63]),
    (BesselKind::J, 13, 0.7, [5.717539426973485e-07, -5.168122693353877e-23, -1.1171955448839628e-39, 8.11160570055935e-57]),
    (BesselKind::J, 13, 1.9, [0.00033918310461967144, -6.365842257782959e-21, 2.5084167236174454e-37, 1.5357047955366405e-53]),
    (BesselKind::J, 13, 2.5, [0.0018457026867819359, 6.431623661325606e-20, 4.759769035815811e-36, -1.2637253353660465e-52]),
    (BesselKind::J, 13, 6.0, [0.18331598365923837, 1.3394083009209057e-17, 4.740782279614432e-34, -4.0057757079751167e-50]),
    (BesselKind::J, 13, 15.0, [0.14150881065813264, 1.3344220350207486e-17, 6.750092710424882e-34, 4.17837951399138e-51]),
    (BesselKind::J, 13, 30.0, [0.09649340274951008, 5.68482809626404e-19, -1.9403807710301872e-35, 9.547702554447028e-52]),
    (BesselKind::Y, 0, 0.05, [-1.9793110008172097, 3.922704684387941e-17, -1.866647451757081e-33, -8.486659577850342e-50]),
    (BesselKind::Y, 0, 0.7, [-0.19066492933739512, 6.182606270711214e-18, 2.8381152304547846e-34, 1.6624384563203007e-50]),
    (BesselKind::Y, 0, 1.9, [0.4968199712838202, -2.515247389422281e-17, 1.347560572394069e-33, 5.484698478462833e-50]),
    (BesselKind::Y, 0, 2.5, [0.4980703596152319, 4.32860753262344e-18, 1.6097517544240927e-34, -1.0435022285217009e-51]),
    (BesselKind::Y, 0, 6.0, [-0.28819468398157916, 4.269220874570487e-18, 2.2903366346449115e-34, 1.6812930967976532e-50]),
    (BesselKind::Y, 0, 15.0, [0.20546429603891828, -1.1185351453082745e-17, -6.06936057415881e-34, -4.074678090087265e-50]),
    (BesselKind::Y, 0, 30.0, [-0.11729573168666403, 6.238827054885396e-18, -1.6441751886201408e-34, 2.864114561766712e-51]),
    (BesselKind::Y, 1, 0.05, [-3.563788851169038, -1.158407238306474e-16, -1.0347338071725438e-32, 5.458880607866657e-49]),
    (BesselKind::Y, 1, 0.7, [-0.7293951585245628, -6.764317388531324e-18, -1.241929014779326e-34, 9.329363704894447e-51]),
    (BesselKind::Y, 1, 1.9, [0.18713496934630297, 2.656075558326421e-18, -9.66205837916436e-35, 1.257211267999699e-51]),
    (BesselKind::Y, 1, 2.5, [0.40427830223905686, 9.756162565316994e-18, -7.216571425019207e-34, -3.702837318867923e-50]),
    (BesselKind::Y, 1, 6.0, [-0.312761075941277, 2.5298920810465637e-18, 5.471601277492986e-35, 3.2855908227429706e-51]),
    (BesselKind::Y, 1, 15.0, [0.15650551590730857, -2.59662992009484e-18, -2.987471890334928e-35, 1.7717420810624054e-51]),
    (BesselKind::Y, 1, 30.0, [-0.022470290598831023, -1.4593162592035163e-18, -5.986483606898876e-35, 2.7948937972261095e-51]),
    (BesselKind::Y, 2, 0.05, [-12.78985517117497, 6.902723554828835e-16, -1.894612511461895e-32, 1.3144428824699142e-48]),
    (BesselKind::Y, 2, 0.7, [-1.1032498719076334, -8.074826722499834e-17, 2.6399766192034358e-33, 7.527476552266583e-50]),
    (BesselKind::Y, 2, 1.9, [-0.1644057723315953, -2.0894190247772915e-18, 7.990286229065332e-35, 1.7141191791497154e-51]),
    (BesselKind::Y, 2, 2.5, [0.1459181379667858, 5.254335313012183e-18, -8.148298771619938e-35, 3.4214175396467134e-51]),
    (BesselKind::Y, 2, 6.0, [-0.17501034430039825, -4.45003511681067e-18, 2.2219020635208707e-35, 1.0731486477167081e-51]),
    (BesselKind::Y, 2, 15.0, [0.02107362803687351, 2.5298618963433355e-19, -1.0940049305928742e-35, 4.346446241036275e-52]),
    (BesselKind::Y, 2, 30.0, [0.08442557066174723, 3.097730179114032e-18, -1.0792113851244923e-34, 6.63178723275988e-51]),
    (BesselKind::Y, 3, 0.05, [-71.45411510578296, 3.161589056508979e-15, -8.400763584040933e-32, 1.0688820625857787e-48]),
    (BesselKind::Y, 3, 0.7, [-1.6563541503977834, -2.588456852101356e-17, -3.864652689327423e-34, 1.165130389484457e-50]),
    (BesselKind::Y, 3, 1.9, [-0.44927021455323163, 5.306775631294472e-18, 2.4769602710280306e-34, -1.6697900099435627e-50]),
    (BesselKind::Y, 3, 2.5, [-0.14029358516674292, -8.432150614054615e-18, -5.220178202609728e-36, 2.4315393114758046e-52]),
    (BesselKind::Y, 3, 6.0, [0.038888563532854484, 2.4108459623000182e-18, 2.60480681325539e-35, 4.818382990039631e-52]),
    (BesselKind::Y, 3, 15.0, [-0.12353398776195211, 2.265847065726959e-18, -5.512097698504684e-35, 3.871836915201058e-51]),
    (BesselKind::Y, 3, 30.0, [0.1431806436837722, -1.3549043891695274e-17, -7.404911516176918e-34, -2.3668885606693823e-50]),
    (BesselKind::Y, 4, 0.05, [-509.6148958461815, -2.4631341029995757e-14, -1.1904307387533597e-30, -3.6813434302928744e-47]),
    (BesselKind::Y, 4, 0.7, [-2.961477561827272, 1.459990798380543e-16, -1.0929859130220854e-32, -3.730968928915271e-49]),
    (BesselKind::Y, 4, 1.9, [-0.669878679001289, -5.588233929471818e-18, -3.488027481685653e-34, -1.9858978605792187e-50]),
    (BesselKind::Y, 4, 2.5, [-0.38133584924180325, -1.2513928221369403e-19, -4.6796220108366485e-36, -2.2851080489922188e-52]),
    (BesselKind::Y, 4, 6.0, [0.22985790254811306, 1.2751151163578565e-17, 3.516333599887652e-35, 4.722950785129438e-52]),
    (BesselKind::Y, 4, 15.0, [-0.20265447896733513, -2.1961119358533184e-18, -1.58474827098513e-34, 3.0296589481167717e-51]),
    (BesselKind::Y, 4, 30.0, [0.12292410306411385, -5.10712585575683e-18, -1.7660508073260342e-34, -6.698418949063567e-51]),
    (BesselKind::Y, 5, 0.05, [-4283.683117495808, -2.9517603813756324e-13, -1.716037077191294e-29, 1.0783338643675406e-45]),
    (BesselKind::Y, 5, 0.7, [-6.369265486037367, 4.2882247458971993e-16, -9.488092744360328e-34, -3.0311680160077537e-51]),
    (BesselKind::Y, 5, 1.9, [-0.8965089923250897, -4.204571692269875e-17, 2.1941679231113516e-33, -3.085359617148755e-50]),
    (BesselKind::Y, 5, 2.5, [-0.5726306044391484, -1.987474330218253e-17, 9.909534645487362e-35, 4.1778755009131027e-51]),
    (BesselKind::Y, 5, 6.0, [0.33220535770770426, -2.214115081161824e-17, -6.194709620248237e-34, -3.044671673240989e-51]),
    (BesselKind::Y, 5, 15.0, [-0.181212313459699, -5.276873351448443e-18, 3.2699931460829765e-34, -8.481115886280342e-51]),
    (BesselKind::Y, 5, 30.0, [0.036788354967208246, -2.6711456915289025e-18, 6.285291868270901e-35, 1.2528529463257776e-51]),
    (BesselKind::Y, 8, 0.05, [-4890258.602606955, -1.7576593839573272e-10, 7.813325348993686e-27, -6.868668860159491e-43]),
    (BesselKind::Y, 8, 0.7, [-132.63405717662675, -8.294933168692569e-15, -4.799691014259549e-31, -3.727155310138504e-47]),
    (BesselKind::Y, 8, 1.9, [-3.2644322604587526, 5.901022328914044e-17, -1.7813998489995288e-33, 3.24960859391754e-50]),
    (BesselKind::Y, 8, 2.5, [-1.433197342967007, -7.291784364247459e-17, 5.519020919905133e-33, -9.326628232577744e-50]),
    (BesselKind::Y, 8, 6.0, [0.09839104345102723, 1.996513956178152e-19, -9.866008329993766e-36, 1.0580201449174185e-52]),
    (BesselKind::Y, 8, 15.0, [0.17260854999606998, 1.3980725932480826e-18, 3.167502189673378e-35, 2.1088076155463315e-51]),
    (BesselKind::Y, 8, 30.0, [-0.1365312411147536, 7.68205887098931e-18, 7.532834767841137e-34, 2.657555467794079e-50]),
    (BesselKind::Y, 13, 0.05, [-2374153962289.0107, -0.00020122266054884997, 2.7356042716779696e-21, 1.4339719479039696e-37]),
    (BesselKind::Y, 13, 0.7, [-86163.70439511599, -4.194741298035136e-12, -3.582283689074586e-28, -3.516029867202693e-45]),
    (BesselKind::Y, 13, 1.9, [-151.1898804182566, -7.019573782743654e-15, 1.3956421145217758e-31, 8.756397452532545e-48]),
    (BesselKind::Y, 13, 2.5, [-28.838718986254687, 3.2337496312994306e-16, 2.24307576222238e-32, -1.2093672316397526e-48]),
    (BesselKind::Y, 13, 6.0, [-0.5317866187891285, 2.0330269690468258e-17, -6.14119817433073e-35, 1.1355173369297503e-51]),
    (BesselKind::Y, 13, 15.0, [-0.16427208610201516, 2.3435503422637648e-18, -9.448326193511312e-35, -1.089276327307199e-51]),
    (BesselKind::Y, 13, 30.0, [0.1114535891871674, -1.584721897317799e-18, -7.021317475692284e-35, -2.275905454598424e-51]),
    (BesselKind::I, 0, 0.05, [1.000625097663032, -3.2540783423056593e-17, -2.344633078398405e-33, -1.6540160418778291e-49]),
    (BesselKind::I, 0, 0.7, [1.1263030183068092, -5.227009587338376e-17, 1.3410267131923543e-34, -6.907745260667887e-51]),
    (BesselKind::I, 0, 1.9, [2.127740194053888, -8.396986823955577e-17, -7.932829013976863e-34, 2.5253953357183822e-52]),
    (BesselKind::I, 0, 2.5, [3.289839144050123, -8.517115227088245e-17, 4.514847363834654e-33, 1.5447868229272945e-49]),
    (BesselKind::I, 0, 6.0, [67.23440697647797, 4.951570881610753e-15, -2.555944563434896e-31, -1.7494900215956215e-47]),
    (BesselKind::I, 0, 15.0, [339649.3732979139, 6.419185694017088e-12, 7.299424411706287e-29, 1.3827734595885586e-45]),
    (BesselKind::I, 0, 30.0, [781672297823.9775, -4.934511018329471e-05, 2.946707180237948e-21, 1.1887341670514067e-37]),
    (BesselKind::I, 1, 0.05, [0.17848675941298306, -5.9915190779501726e-18, -4.615877511412105e-35, -1.48943326773018e-51]),
    (BesselKind::I, 1, 0.7, [0.7234267260045759, 5.030274951240555e-17, 3.167564083475252e-34, -1.7744287039620664e-50]),
    (BesselKind::I, 1, 1.9, [1.89176400649451, -3.872449171503545e-17, 1.897774092603548e-33, -5.486768158703683e-50]),
    (BesselKind::I, 1, 2.5, [3.0530935381967184, 7.669060053305072e-17, -3.096117726008067e-33, -4.5612121570499546e-51]),
    (BesselKind::I, 1, 6.0, [65.70503691665827, 4.629228039428593e-15, 1.3454523807351108e-31, 1.2547805507576017e-48]),
    (BesselKind::I, 1, 15.0, [336729.8871870641, -2.5913536984440232e-11, -6.581339799236425e-29, -2.236197096745709e-45]),
    (BesselKind::I, 1, 30.0, [778366068840.4464, -6.939253439309357e-06, 2.552881993582025e-22, -3.944554764052892e-39]),
    (BesselKind::I, 2, 0.05, [0.02500781331384447, 6.32667555049168e-20, 4.3354863464507764e-36, -3.4274808189490287e-53]),
    (BesselKind::I, 2, 0.7, [0.37187967777700864, -1.5373512711425286e-17, -1.2187013302456076e-34, 9.909239800208938e-52]),
    (BesselKind::I, 2, 1.9, [1.4482443730548888, -1.2373860494749172e-17, 7.5285489157403155e-34, -2.3427318899468943e-50]),
    (BesselKind::I, 2, 2.5, [2.5167162452886984, 2.4557317798073097e-17, -4.3858167679118885e-34, 2.0634003941878932e-50]),
    (BesselKind::I, 2, 6.0, [61.341936777640235, 2.5270546891326978e-15, -1.336319853016342e-31, 9.288071511506946e-48]),
    (BesselKind::I, 2, 15.0, [328124.9219702064, 2.569082071456178e-11, -2.7604284701734357e-28, 3.420850522943578e-45]),
    (BesselKind::I, 2, 30.0, [768532038938.957, -3.175570528921182e-05, 2.706378501304981e-21, 5.356342336440481e-38]),
    (BesselKind::I, 3, 0.05, [0.002974283645013087, -1.6322410334163497e-20, -1.1783520929523551e-36, 4.446886509045688e-53]),
    (BesselKind::I, 3, 0.7, [0.16353076132992353, 2.427102741564907e-18, 1.37799277591497e-34, 5.061110923823009e-52]),
    (BesselKind::I, 3, 1.9, [0.9826759816307223, -5.5504549170365287e-17, -1.3378689033788585e-33, 1.9422004365726384e-50]),
    (BesselKind::I, 3, 2.5, [1.873278388837619, -1.021649440959585e-16, -5.111894745649498e-33, -6.827810124495513e-50]),
    (BesselKind::I, 3, 6.0, [54.7550048469085, 1.9298411968645406e-15, -1.613393142219105e-32, 9.578143178413528e-49]),
    (BesselKind::I, 3, 15.0, [314281.22804132284, -1.997314003343001e-11, 1.1482077724692727e-27, 6.864768133271327e-44]),
    (BesselKind::I, 3, 30.0, [752420533212.4315, 5.499086272299164e-06, -3.7719221517397663e-22, -8.558078305555338e-40]),
    (BesselKind::I, 4, 0.05, [0.00031256510925314164, 1.9835678510307353e-20, -1.2154051299333083e-36, 5.474118551050924e-53]),
    (BesselKind::I, 4, 0.7, [0.0637896532296416, 5.531166068994521e-18, -3.628875691282196e-34, -1.072278897160291e-50]),
    (BesselKind::I, 4, 1.9, [0.6032724329434783, 3.8933774880767246e-17, 2.862051961884388e-33, 1.5077102443380986e-49]),
    (BesselKind::I, 4, 2.5, [1.2764661478191643, -6.040808552433466e-17, -2.5298582811793802e-33, 6.954870256086609e-50]),
    (BesselKind::I, 4, 6.0, [46.787094717264566, -2.9962080390344818e-15, 5.19031738307257e-32, -2.344850298895808e-48]),
    (BesselKind::I, 4, 15.0, [295899.38370188634, 1.8515785842333493e-11, -1.5946456526273001e-28, -3.5574950293099996e-45]),
    (BesselKind::I, 4, 30.0, [730436828561.3804, -1.4675979830680584e-05, 1.6871424190442836e-22, 4.022389936337133e-39]),
    (BesselKind::I, 5, 0.05, [2.974071219783891e-05, -1.6703396515244643e-21, -7.556833366134702e-38, -2.4637972921359137e-54]),
    (BesselKind::I, 5, 0.7, [0.022580606019189355, 3.9463345837646825e-19, -7.766176660066763e-36, -2.8180161937461997e-53]),
    (BesselKind::I, 5, 1.9, [0.3401703512881063, 2.6050984355721245e-17, -7.466034155925576e-34, 6.923235645049964e-51]),
    (BesselKind::I, 5, 2.5, [0.8051594715915757, 2.1652849508175874e-17, 1.1892632221595843e-33, -2.526165553064411e-50]),
    (BesselKind::I, 5, 6.0, [38.32753449320403, 1.115937621958223e-16, -5.299215944333111e-33, 9.164562605332316e-50]),
    (BesselKind::I, 5, 15.0, [273873.6415787995, -1.027737679506075e-11, 3.5077990107083408e-28, -1.5965733363288362e-44]),
    (BesselKind::I, 5, 30.0, [703124015519.2032, 4.717869183460727e-06, -2.1521234747698003e-22, -8.560951384286488e-39]),
    (BesselKind::I, 8, 0.05, [1.627807627784197e-08, 6.631832080856213e-26, 4.697141127203387e-42, -1.1515810286758837e-58]),
    (BesselKind::I, 8, 0.7, [0.0006407365928301105, -1.0418109631167063e-20, 2.946709634712297e-37, 1.5719045797075147e-53]),
    (BesselKind::I, 8, 1.9, [0.04054460408412892, 1.6367843063424436e-18, -3.528349635049175e-35, 1.7028134744696737e-52]),
    (BesselKind::I, 8, 2.5, [0.13797716675187888, -9.364005068606981e-18, -3.6931818718476766e-35, 1.642839896235971e-51]),
    (BesselKind::I, 8, 6.0, [16.6365544178007, 7.68930496344335e-16, -9.947155669951426e-33, -4.239037150393871e-49]),
    (BesselKind::I, 8, 15.0, [196212.015842005, 1.3706934367832398e-11, -6.261271864999296e-28, 3.2660545018493214e-44]),
    (BesselKind::I, 8, 30.0, [596208736201.8925, -2.33646357349897e-05, -5.713503192468151e-22, -3.8869942507493673e-38]),
    (BesselKind::I, 13, 0.05, [2.0630674864818487e-14, 1.0484548228588557e-32, -2.6247169724292892e-49, -1.389019139508741e-65]),
    (BesselKind::I, 13, 0.7, [5.907396922522445e-07, -4.4463506726384653e-23, 2.1623240477720093e-39, -2.3073926532777762e-56]),
    (BesselKind::I, 13, 1.9, [0.00043148620774843496, 7.164754559039645e-21, 3.987613966619118e-37, -4.0508775419497463e-53]),
    (BesselKind::I, 13, 2.5, [0.0028001592230352105, 8.464869848621923e-20, 5.256893360971052e-36, 3.183524647621182e-52]),
    (BesselKind::I, 13, 6.0, [2.0826909071595514, 1.6629539751776944e-16, -8.781627049335246e-34, -5.868294847601215e-50]),
    (BesselKind::I, 13, 15.0, [81002.74394342325, 7.174548272221419e-12, 1.5227443204638675e-28, 6.067414663521315e-45]),
    (BesselKind::I, 13, 30.0, [383023420120.2679, -1.383185420379067e-05, -3.4485062574287375e-22, 1.3736167345581977e-38]),
    (BesselKind::K, 0, 0.05, [3.11423402947199, -6.765846340330507e-17, 5.518260609099723e-33, -1.0069903369639179e-49]),
    (BesselKind::K, 0, 0.7, [0.6605198599151016, -5.270246089307263e-17, 6.520129529958955e-34, -2.583304620099814e-50]),
    (BesselKind::K, 0, 1.9, [0.1288459792760475, 4.244362899761753e-18, -2.912451503719304e-34, -8.336705033713931e-51]),
    (BesselKind::K, 0, 2.5, [0.06234755320036619, -2.8899319882642593e-18, -2.2574550912078278e-35, 1.65938316269188e-52]),
    (BesselKind::K, 0, 6.0, [0.0012439943280131232, -9.083076783631193e-20, -1.585546449451517e-36, 7.804192062986144e-53]),
    (BesselKind::K, 0, 15.0, [9.819536482396435e-08, -7.087251788827559e-25, -3.597510293402052e-41, 1.196179012420618e-58]),
    (BesselKind::K, 0, 30.0, [2.1324774964630563e-14, 1.179082705041528e-30, 3.8672219962031427e-48, 1.563884369887594e-64]),
    (BesselKind::K, 1, 0.05, [5.331632569105759, -3.5826175911414205e-16, -1.177539792495541e-32, 4.053897598788946e-49]),
    (BesselKind::K, 1, 0.7, [0.7438832523206937, 4.2398991610892604e-17, 2.9065192917625725e-33, 2.7919095642553716e-50]),
    (BesselKind::K, 1, 1.9, [0.13599521326566796, 9.62097910022198e-18, 1.5594676723577197e-34, -1.391313706644989e-51]),
    (BesselKind::K, 1, 2.5, [0.06506594315400999, 2.527041801038952e-18, 8.903327218795787e-35, -2.356893250511838e-51]),
    (BesselKind::K, 1, 6.0, [0.0012682866523815886, -1.5197086755175804e-20, -6.30696990408191e-38, -4.458067069127517e-54]),
    (BesselKind::K, 1, 15.0, [9.899131203287725e-08, -1.7838083895125592e-24, -1.2348092916384713e-41, 8.424963558484007e-58]),
    (BesselKind::K, 1, 30.0, [2.1412375659560114e-14, -6.257752001402272e-32, 4.733238033832914e-48, 7.294786615865765e-65]),
    (BesselKind::K, 2, 0.05, [19.909674325882506, -3.4415671914154944e-16, -2.2012991439594848e-32, -1.3238682460212921e-48]),
    (BesselKind::K, 2, 0.7, [1.050283535312918, -2.3264464158968893e-17, -9.798805619917562e-34, 5.062679534468426e-50]),
    (BesselKind::K, 2, 1.9, [0.15966015303266762, 1.1577572159912447e-17, 9.145762399203345e-35, 3.6926709587170354e-51]),
    (BesselKind::K, 2, 2.5, [0.07389081634774707, -1.657889944345189e-18, -3.2423923770535553e-35, 1.7041718306266264e-52]),
    (BesselKind::K, 2, 6.0, [0.001343919717735509, -1.0087773069981202e-19, -4.212270470079824e-36, 1.7154976605846057e-52]),
    (BesselKind::K, 2, 15.0, [1.0141729369762092e-07, -1.412887233547138e-24, -1.4742885379179683e-41, -4.1969262680652476e-58]),
    (BesselKind::K, 2, 30.0, [2.1677320018915495e-14, -4.67326611397439e-31, -1.4772085125892525e-47, -3.3330088518639105e-65]),
    (BesselKind::K, 3, 0.05, [111.96428395122092, 2.544413376142682e-15, 8.462387093061544e-32, 3.1619505654325097e-48]),
    (BesselKind::K, 3, 0.7, [1.8065736127788279, -5.16571506569877e-17, 2.8524945289648576e-33, -1.3111753140956649e-49]),
    (BesselKind::K, 3, 1.9, [0.20757164130023006, 3.422382973140283e-18, -7.200995008162095e-35, -3.2140175870223995e-51]),
    (BesselKind::K, 3, 2.5, [0.09109232041561398, 6.313416083017424e-18, 2.7872097661411988e-34, 1.3806043593873479e-50]),
    (BesselKind::K, 3, 6.0, [0.0014796677611118533, 9.069028270084534e-20, -2.079758340950993e-36, 3.656087034787512e-53]),
    (BesselKind::K, 3, 15.0, [1.0559073283506906e-07, 4.27355295824921e-24, -6.215023039507234e-41, -3.8593717283439635e-57]),
    (BesselKind::K, 3, 30.0, [2.2126121514878785e-14, -3.802077994362282e-31, 1.255436361173702e-47, 4.602664743254101e-64]),
    (BesselKind::K, 4, 0.05, [799.5012070647722, -2.6956040238327097e-14, -7.012731958194819e-31, -4.1189732079124184e-47]),
    (BesselKind::K, 4, 0.7, [3.6613299608091534, -5.567964893069791e-17, -1.4560974042898244e-33, 4.6165410608243e-50]),
    (BesselKind::K, 4, 1.9, [0.2969092982578029, 2.282678819688773e-17, 1.1602351310752477e-33, 4.882071933530014e-51]),
    (BesselKind::K, 4, 2.5, [0.12146020627856384, -2.8284651629589648e-18, -1.2555088770399616e-34, 9.389672077032783e-51]),
    (BesselKind::K, 4, 6.0, [0.0016919675672582928, -5.2176533237215645e-20, 1.0227174446619499e-36, 2.385997972884015e-53]),
    (BesselKind::K, 4, 15.0, [1.117176706503138e-07, 5.279171763706899e-24, 2.9266696518419056e-40, -1.0471988954621426e-56]),
    (BesselKind::K, 4, 30.0, [2.2769929632558262e-14, 1.147927597615032e-30, 8.46248267400913e-47, 2.6255461963839337e-63]),
    (BesselKind::K, 5, 0.05, [6723.188669642361, 1.5646022514737018e-14, 3.315437002857458e-31, -4.097922736125946e-48]),
    (BesselKind::K, 5, 0.7, [8.486341592801384, 6.611301832090084e-16, 4.2058665055590077e-32, -2.3510097844392827e-48]),
    (BesselKind::K, 5, 1.9, [0.4637399100555049, 2.5963112216391234e-17, 9.278176828391586e-34, -3.227962476023096e-50]),
    (BesselKind::K, 5, 2.5, [0.17437672765274678, -1.210131939184327e-17, 4.234984441249017e-34, 3.131605320672639e-50]),
    (BesselKind::K, 5, 6.0, [0.0020081205329375153, 3.0148054595246867e-20, -1.1029488695163155e-36, -6.970152908557107e-53]),
    (BesselKind::K, 5, 15.0, [1.2010945859989105e-07, 1.2305792002985726e-23, -1.7171493284818513e-40, 7.207673772052994e-57]),
    (BesselKind::K, 5, 30.0, [2.3624987811047993e-14, -7.31687024134455e-31, 1.693631864754425e-47, -2.456552878459776e-64]),
    (BesselKind::K, 8, 0.05, [7678400.249947983, -2.692474952459633e-10, -2.444203097214139e-26, -5.775496441152255e-43]),
    (BesselKind::K, 8, 0.7, [191.9942073235315, -2.441706165404912e-15, -8.659601671923678e-32, -1.0373953639938707e-49]),
    (BesselKind::K, 8, 1.9, [2.7750114873879084, 1.6799848446797719e-16, -1.0466680402073585e-32, -1.5608050347139585e-49]),
    (BesselKind::K, 8, 2.5, [0.7652053576228419, 3.9806417250407085e-18, 3.3140729709983382e-34, -1.1856448054335819e-51]),
    (BesselKind::K, 8, 6.0, [0.004163865663165997, -1.155584745961378e-19, -2.50774139564324e-36, -1.2277918982166362e-52]),
    (BesselKind::K, 8, 15.0, [1.6420113966539563e-07, 1.1276945234801407e-23, -1.1302697464933975e-40, -7.454268707561444e-58]),
    (BesselKind::K, 8, 30.0, [2.771259175987625e-14, -4.295392600857308e-31, -1.8834815622504685e-47, 6.356017356944167e-65]),
    (BesselKind::K, 13, 0.05, [3728464848533.7056, -0.00015430172497929413, 1.0628191215416201e-20, -5.966783382044639e-37]),
    (BesselKind::K, 13, 0.7, [129448.78771189871, 1.966132323656002e-12, -4.1539028060764926e-29, 1.48628915436923e-45]),
    (BesselKind::K, 13, 1.9, [170.98120690711028, -9.053877959578137e-15, -1.9756491997604043e-31, -1.7067752222152738e-47]),
    (BesselKind::K, 13, 2.5, [25.61143352364679, -8.486777156721708e-16, 4.0143039331049354e-32, 1.0289730943505715e-48]),
    (BesselKind::K, 13, 6.0, [0.027105957383741, -3.6959238777248997e-19, 2.3429747118566116e-35, -6.235379324789488e-52]),
    (BesselKind::K, 13, 15.0, [3.776124055344092e-07, -2.0778365743664927e-23, 4.332648897726061e-40, -4.027271413164037e-56]),
    (BesselKind::K, 13, 30.0, [4.253087439370227e-14, 1.1669516624804179e-30, -4.71233687580243e-47, -2.1760863387175966e-63]),
];

#[test]
fn quad_double_matches_reference() {
    for &(kind, twice, x, want) in CASES {
        let got: Qd = bessel(kind, Order::from_twice(twice), Qd::from(x)).unwrap();
        let want = Qd::from_components(want);
        let err = ((got - want) / want).abs().hi();
        assert!(err <= 1e-58, "{kind:?} order {twice}/2 at {x}: relative error {err:e}");
    }
}
