// generated by an mpmath script at 140 digits; do not edit by hand
pub const ORACLE: &[Case] = &[
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.5765157411699139, 0.0) },
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(0.69314718055994529, 3.1415926535897931), value: c(-0.9875583864468791, -1.254880507190083) },
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(0.69314718055994529, -3.1415926535897931), value: c(-0.9875583864468791, 1.254880507190083) },
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(0.69314718055994529, 6.2831853071795862), value: c(-0.64945471413462262, 0.09814497083677946) },
    Case { f: "S", mu: c(0.40000000000000002, 0.20000000000000001), nu: c(0.14999999999999999, 0.0), w: c(0.40546510810816438, 0.69999999999999996), value: c(0.65551909528000563, -0.16710788210261429) },
    Case { f: "S", mu: c(-1.2, 0.0), nu: c(2.2999999999999998, 0.0), w: c(1.0986122886681098, 0.40000000000000002), value: c(0.057221872534297354, -0.071348074030821807) },
    Case { f: "S", mu: c(-1.2, 0.0), nu: c(2.2999999999999998, 0.0), w: c(2.4849066497880004, 0.40000000000000002), value: c(2.6910609076458735e-3, -3.2686196852537412e-3) },
    Case { f: "S", mu: c(0.69999999999999996, 0.0), nu: c(1.3, -0.40000000000000002), w: c(1.6094379124341003, -2.0), value: c(0.47297543633170419, 0.29493051395630983) },
    Case { f: "S", mu: c(2.5, 0.0), nu: c(0.0, 0.5), w: c(-0.51082562376599072, 1.0), value: c(-2.5335522198745331, 1.0526764209902366) },
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(2.9957322735539909, 0.29999999999999999), value: c(0.12002335529253617, -0.025499400484298334) },
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(3.6888794541139363, 0.20000000000000001), value: c(0.074847177353373973, -0.01053875951268777) },
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(3.6888794541139363, 2.5), value: c(-0.013496709109732141, -0.074385258462254139) },
    Case { f: "S", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(3.6888794541139363, -4.0), value: c(-5.9290355100188506e+11, 3.1934643170053028e+12) },
    Case { f: "S", mu: c(-1.2, 0.0), nu: c(2.2999999999999998, 0.0), w: c(3.912023005428146, 7.0), value: c(7.4999479893179907e+12, -1.5955009835969548e+12) },
    Case { f: "S", mu: c(1.1000000000000001, 0.0), nu: c(0.59999999999999998, 0.0), w: c(4.3820266346738812, 0.10000000000000001), value: c(1.549924688368802, 0.015482939960572719) },
    Case { f: "S", mu: c(1.1000000000000001, 0.0), nu: c(0.59999999999999998, 0.0), w: c(3.4011973816621555, 3.0), value: c(1.3456661409403378, 0.41428611432493279) },
    Case { f: "S", mu: c(-0.29999999999999999, 0.0), nu: c(0.69999999999999996, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.35231180191887633, 0.0) },
    Case { f: "S", mu: c(-2.2999999999999998, 0.0), nu: c(0.69999999999999996, 0.0), w: c(0.40546510810816438, 0.29999999999999999), value: c(0.070096294416696478, -0.058354134634838509) },
    Case { f: "S", mu: c(-2.2999999999999998, 0.0), nu: c(0.69999999999999996, 0.0), w: c(0.40546510810816438, 3.4415926535897934), value: c(2.2164867293010827, 0.59506025893418314) },
    Case { f: "S", mu: c(-1.0, 0.0), nu: c(0.0, 0.0), w: c(0.0, 0.0), value: c(0.4422364520585998, 0.0) },
    Case { f: "S", mu: c(-1.0, 0.0), nu: c(0.0, 0.0), w: c(0.53062825106217038, 0.40000000000000002), value: c(0.18263605462458996, -0.12223742474576134) },
    Case { f: "S", mu: c(-1.0, 0.0), nu: c(0.0, 0.0), w: c(0.69314718055994529, -3.1415926535897931), value: c(-0.93783387799338812, -2.5186029924964324) },
    Case { f: "S", mu: c(-3.0, 0.0), nu: c(0.0, 0.0), w: c(0.78845736036427028, 1.0), value: c(-0.021017529074317106, -3.4951992115370822e-3) },
    Case { f: "S", mu: c(-2.0, 0.0), nu: c(-1.0, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.064044797212277836, 0.0) },
    Case { f: "S", mu: c(-3.0, 0.0), nu: c(-2.0, 0.0), w: c(0.26236426446749106, 0.5), value: c(9.8134626074236201e-3, -0.10334641417124264) },
    Case { f: "S", mu: c(-3.0, 0.0), nu: c(2.0, 0.0), w: c(0.26236426446749106, 0.5), value: c(9.8134626074236201e-3, -0.10334641417124264) },
    Case { f: "S", mu: c(-5.0, 0.0), nu: c(-2.0, 0.0), w: c(0.91629073187415511, -0.5), value: c(-8.1861736744480321e-4, 7.986989416554766e-4) },
    Case { f: "S", mu: c(-2.0, 0.0), nu: c(1.0, 0.0), w: c(0.69314718055994529, 6.2831853071795862), value: c(-5.6280009036423727, -0.52818387869786675) },
    Case { f: "S", mu: c(-0.29999999999999999, 0.0), nu: c(0.69999999999999996, 0.0), w: c(3.8066624897703196, 0.29999999999999999), value: c(6.5579793834687337e-3, -2.6931451209572526e-3) },
    Case { f: "S", mu: c(-0.29999999999999999, 0.0), nu: c(0.69999999999999996, 0.0), w: c(3.8066624897703196, 3.5), value: c(2.0996034363744768e+6, 8.9609796894618062e+5) },
    Case { f: "S", mu: c(-1.0, 0.0), nu: c(0.0, 0.0), w: c(3.6888794541139363, 0.20000000000000001), value: c(5.745801838537872e-4, -2.4227981896888421e-4) },
    Case { f: "S", mu: c(-1.0, 0.0), nu: c(0.0, 0.0), w: c(3.6888794541139363, 4.0), value: c(-6.9439332161642152e+12, 5.3307886533003231e+12) },
    Case { f: "S", mu: c(-3.0, 0.0), nu: c(-2.0, 0.0), w: c(3.7376696182833684, -3.2999999999999998), value: c(-56.861746794433369, 1.6211878575326592) },
    Case { f: "S", mu: c(0.29999999999999999, 0.20000000000000001), nu: c(-1.3, -0.20000000000000001), w: c(0.69314718055994529, 0.5), value: c(0.67582389262490757, -0.14858309102871163) },
    Case { f: "S", mu: c(0.30000009999999999, 0.0), nu: c(-0.69999999999999996, 0.0), w: c(0.69314718055994529, 0.20000000000000001), value: c(0.60954950079313854, -0.085898861539699015) },
    Case { f: "S", mu: c(1.5000001000000001, 0.0), nu: c(1.5, 0.0), w: c(0.69314718055994529, 0.20000000000000001), value: c(2.0826734280418927, -0.067778535694304062) },
    Case { f: "s", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.99806066496550215, 0.0) },
    Case { f: "s", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(0.69314718055994529, 3.1415926535897931), value: c(-0.58664533975994125, -0.80744803937425188) },
    Case { f: "s", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(0.0, 0.0), value: c(0.89324374097502617, 0.0) },
    Case { f: "s", mu: c(-0.5, 0.29999999999999999), nu: c(1.2, 0.0), w: c(1.3862943611198906, 2.0), value: c(4.6649226462893445, -2.8630775681888705) },
    Case { f: "s", mu: c(0.29999999999999999, 0.0), nu: c(0.10000000000000001, 0.0), w: c(3.4011973816621555, 0.5), value: c(2.809642108573449e+4, 1.5052470639339182e+5) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(0.0, 0.0), value: c(0.76519768655796655, 0.0) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(0.0, 0.0), value: c(0.088256964215676958, 0.0) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(0.0, 0.0), value: c(0.76519768655796655, 0.088256964215676958) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(0.0, 0.0), value: c(0.76519768655796655, -0.088256964215676958) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 0.0), value: c(0.14275307556807911, 0.0) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 0.0), value: c(0.43277278103807133, 0.0) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 0.0), value: c(0.14275307556807911, 0.43277278103807133) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 0.0), value: c(0.14275307556807911, -0.43277278103807133) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 2.0), value: c(-2.1592357884954516, 2.9529578452852549) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 2.0), value: c(-2.928799998491196, -2.1452520986667207) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 2.0), value: c(-0.013983689828730891, 0.024157846794058845) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(0.69999999999999996, 0.0), w: c(1.1314021114911006, 2.0), value: c(-4.3044878871621723, 5.8817578437764509) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.35283402861563771, 0.0) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, 0.0), value: c(-0.61740810419068269, 0.0) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.35283402861563771, -0.61740810419068269) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.35283402861563771, 0.61740810419068269) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, -3.1415926535897931), value: c(0.35283402861563771, 5.4837425206784249e-17) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, -3.1415926535897931), value: c(-0.61740810419068258, -0.70566805723127529) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, -3.1415926535897931), value: c(1.058502085846913, -0.61740810419068253) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(2.0, 0.0), w: c(0.69314718055994529, -3.1415926535897931), value: c(-0.35283402861563758, 0.61740810419068264) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(-1.0, 0.0), w: c(0.40546510810816438, 0.5), value: c(-0.62828509787379624, -0.1612951026568158) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(-1.0, 0.0), w: c(0.40546510810816438, 0.5), value: c(0.4898899196443654, -0.47325023277015471) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(-1.0, 0.0), w: c(0.40546510810816438, 0.5), value: c(-0.15503486510364152, 0.3285948169875496) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(-1.0, 0.0), w: c(0.40546510810816438, 0.5), value: c(-1.1015353306439509, -0.6511850223011812) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(1.3, 0.40000000000000002), w: c(3.2188758248682006, 0.40000000000000002), value: c(-7.6156717262803988, -726.73857569905423) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(1.3, 0.40000000000000002), w: c(3.2188758248682006, 0.40000000000000002), value: c(726.73859192590364, -7.6156783902225856) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(1.3, 0.40000000000000002), w: c(3.2188758248682006, 0.40000000000000002), value: c(6.6639421867658729e-6, 1.6226849404871137e-5) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(1.3, 0.40000000000000002), w: c(3.2188758248682006, 0.40000000000000002), value: c(-15.231350116502984, -1.4534771676249579e+3) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(0.29999999999999999, 0.0), w: c(3.6888794541139363, 2.7999999999999998), value: c(4.1136932603834832e+4, -6.4480555083656018e+3) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(0.29999999999999999, 0.0), w: c(3.6888794541139363, 2.7999999999999998), value: c(6.4480555082744779e+3, 4.1136932604002812e+4) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(0.29999999999999999, 0.0), w: c(3.6888794541139363, 2.7999999999999998), value: c(-1.6798016342934451e-7, -9.1123876858356232e-8) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(0.29999999999999999, 0.0), w: c(3.6888794541139363, 2.7999999999999998), value: c(8.2273865207837645e+4, -1.289611101664008e+4) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(1.6094379124341003, 0.0), value: c(-0.17759677131433846, 0.0) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(1.6094379124341003, 0.0), value: c(-0.30851762524903371, 0.0) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(1.6094379124341003, 0.0), value: c(-0.17759677131433846, -0.30851762524903371) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(0.0, 0.0), w: c(1.6094379124341003, 0.0), value: c(-0.17759677131433846, 0.30851762524903371) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(3.0, 0.0), w: c(-2.3025850929940455, 0.20000000000000001), value: c(1.7187457344391808e-5, 1.1752431416352476e-5) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(3.0, 0.0), w: c(-2.3025850929940455, 0.20000000000000001), value: c(-4.2096469050509055e+3, 2.8769636675751497e+3) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(3.0, 0.0), w: c(-2.3025850929940455, 0.20000000000000001), value: c(-2.8769636503876924e+3, -4.2096468932984741e+3) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(3.0, 0.0), w: c(-2.3025850929940455, 0.20000000000000001), value: c(2.8769636847626071e+3, 4.2096469168033369e+3) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(0.5, 0.0), w: c(2.9444389791664403, -1.5), value: c(1.3492300591736988e+7, 7.7828000569308662e+6) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(0.5, 0.0), w: c(2.9444389791664403, -1.5), value: c(7.7828000569308653e+6, -1.3492300591736987e+7) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(0.5, 0.0), w: c(2.9444389791664403, -1.5), value: c(2.6984601183473974e+7, 1.5565600113861731e+7) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(0.5, 0.0), w: c(2.9444389791664403, -1.5), value: c(6.0198115378862177e-10, 8.9132953974156595e-10) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(4.5, 0.0), w: c(4.0943445622221004, 0.0), value: c(-0.047308338141007132, 0.0) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(4.5, 0.0), w: c(4.0943445622221004, 0.0), value: c(0.091661522475619081, 0.0) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(4.5, 0.0), w: c(4.0943445622221004, 0.0), value: c(-0.047308338141007132, 0.091661522475619081) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(4.5, 0.0), w: c(4.0943445622221004, 0.0), value: c(-0.047308338141007132, -0.091661522475619081) },
    Case { f: "J", mu: c(0.0, 0.0), nu: c(1.0, 0.0), w: c(3.5553480614894135, -4.0), value: c(1.0917474221680429e+10, -1.8323385946691543e+10) },
    Case { f: "Y", mu: c(0.0, 0.0), nu: c(1.0, 0.0), w: c(3.5553480614894135, -4.0), value: c(-5.4970157840074629e+10, -3.2752422665041287e+10) },
    Case { f: "H1", mu: c(0.0, 0.0), nu: c(1.0, 0.0), w: c(3.5553480614894135, -4.0), value: c(4.3669896886721716e+10, -7.3293543786766172e+10) },
    Case { f: "H2", mu: c(0.0, 0.0), nu: c(1.0, 0.0), w: c(3.5553480614894135, -4.0), value: c(-2.1834948443360858e+10, 3.6646771893383086e+10) },
    Case { f: "H", mu: c(0.0, 0.0), nu: c(0.29999999999999999, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.82229915891865782, 0.0) },
    Case { f: "H", mu: c(0.0, 0.0), nu: c(0.40000000000000002, 0.0), w: c(1.0986122886681098, 0.29999999999999999), value: c(1.0527184069139612, -0.10564610104940064) },
    Case { f: "H", mu: c(0.0, 0.0), nu: c(1.5, 0.0), w: c(0.69314718055994529, 0.0), value: c(0.45066109396293089, 0.0) },
    Case { f: "H", mu: c(0.0, 0.0), nu: c(-1.5, 0.0), w: c(0.69314718055994529, 0.0), value: c(-0.49129377868716234, 0.0) },
    Case { f: "H", mu: c(0.0, 0.0), nu: c(0.29999999999999999, 0.0), w: c(2.7080502011022101, 0.20000000000000001), value: c(1.7980762351147941, 1.1228034724642275) },
    Case { f: "H", mu: c(0.0, 0.0), nu: c(2.2000000000000002, 0.0), w: c(3.2188758248682006, -0.40000000000000002), value: c(293.30496931933425, -1.2748538085341283e+3) },
    Case { f: "H", mu: c(0.0, 0.0), nu: c(0.40000000000000002, 0.0), w: c(1.0986122886681098, 3.1415926535897931), value: c(-0.26798357776892499, -0.82476864553274506) },
];
