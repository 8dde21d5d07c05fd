// Generated with mpmath at 30 digits; expectations and transforms by quadrature of the kernels.
type Row = (&'static str, &'static [(&'static str, f64)], f64, f64, f64, f64);
pub const DENSITY: &[Row] = &[
    ("besq", &[("n", 3.0), ("mu", 0.0), ("b", 0.0)], 1.0, 1.0, 1.0, 0.17247565694412231299),
    ("besq", &[("n", 3.0), ("mu", 0.0), ("b", 0.0)], 0.5, 2.0, 1.3, 0.18474760295359551777),
    ("besq", &[("n", 3.0), ("mu", 0.0), ("b", 0.0)], 0.25, 0.5, 0.7, 0.54076351630151000705),
    ("besq", &[("n", 2.5), ("mu", 0.7), ("b", 0.0)], 1.0, 1.0, 1.0, 0.080280982860872074807),
    ("besq", &[("n", 2.5), ("mu", 0.7), ("b", 0.0)], 0.5, 2.0, 1.3, 0.15550235871230289673),
    ("besq", &[("n", 2.5), ("mu", 0.7), ("b", 0.0)], 0.25, 0.5, 0.7, 0.37451007403938679541),
    ("besq", &[("n", 4.0), ("mu", 1.2), ("b", 0.0)], 1.0, 1.0, 1.0, 0.032117877478879281894),
    ("besq", &[("n", 4.0), ("mu", 1.2), ("b", 0.0)], 0.5, 2.0, 1.3, 0.094237643834486380019),
    ("besq", &[("n", 4.0), ("mu", 1.2), ("b", 0.0)], 0.25, 0.5, 0.7, 0.26767074396534117275),
    ("besq", &[("n", 2.0), ("mu", 0.0), ("b", 1.0)], 1.0, 1.0, 1.0, 0.13612319390281688724),
    ("besq", &[("n", 2.0), ("mu", 0.0), ("b", 1.0)], 0.5, 2.0, 1.3, 0.14230307126503569681),
    ("besq", &[("n", 2.0), ("mu", 0.0), ("b", 1.0)], 0.25, 0.5, 0.7, 0.4987333018291260874),
    ("besq", &[("n", 3.0), ("mu", 0.5), ("b", 0.5)], 1.0, 1.0, 1.0, 0.075391475852714774028),
    ("besq", &[("n", 3.0), ("mu", 0.5), ("b", 0.5)], 0.5, 2.0, 1.3, 0.13727189279812392941),
    ("besq", &[("n", 3.0), ("mu", 0.5), ("b", 0.5)], 0.25, 0.5, 0.7, 0.40376876984993157921),
    ("bessel", &[("a", 1.0), ("mu", 1.0)], 1.0, 1.0, 1.0, 0.24204846804998735853),
    ("bessel", &[("a", 1.0), ("mu", 1.0)], 0.5, 2.0, 1.3, 0.21287487184378164991),
    ("bessel", &[("a", 1.0), ("mu", 1.0)], 0.25, 0.5, 0.7, 0.74915896369386827401),
    ("bessel", &[("a", 0.8), ("mu", 0.4)], 1.0, 1.0, 1.0, 0.33387468475120683508),
    ("bessel", &[("a", 0.8), ("mu", 0.4)], 0.5, 2.0, 1.3, 0.24381495504637895177),
    ("bessel", &[("a", 0.8), ("mu", 0.4)], 0.25, 0.5, 0.7, 0.88496125654690091548),
    ("bessel", &[("a", 1.5), ("mu", 0.0)], 1.0, 1.0, 1.0, 0.20791041534970844887),
    ("bessel", &[("a", 1.5), ("mu", 0.0)], 0.5, 2.0, 1.3, 0.16708634540083390734),
    ("bessel", &[("a", 1.5), ("mu", 0.0)], 0.25, 0.5, 0.7, 0.79069508695079209339),
    ("pitman-yor", &[("a", 0.5), ("b", 1.0), ("mu", 0.0)], 1.0, 1.0, 1.0, 0.20922354798137670115),
    ("pitman-yor", &[("a", 0.5), ("b", 1.0), ("mu", 0.0)], 0.5, 2.0, 1.3, 0.12604876061693403021),
    ("pitman-yor", &[("a", 0.5), ("b", 1.0), ("mu", 0.0)], 0.25, 0.5, 0.7, 0.88868831638469965695),
    ("pitman-yor", &[("a", 1.0), ("b", 1.0), ("mu", 0.5)], 1.0, 1.0, 1.0, 0.073946079838881150582),
    ("pitman-yor", &[("a", 1.0), ("b", 1.0), ("mu", 0.5)], 0.5, 2.0, 1.3, 0.090221020318140947408),
    ("pitman-yor", &[("a", 1.0), ("b", 1.0), ("mu", 0.5)], 0.25, 0.5, 0.7, 0.47583235838804347685),
    ("pitman-yor", &[("a", -0.5), ("b", 2.0), ("mu", 0.3)], 1.0, 1.0, 1.0, 0.030784363204511430812),
    ("pitman-yor", &[("a", -0.5), ("b", 2.0), ("mu", 0.3)], 0.5, 2.0, 1.3, 0.02954523033321997632),
    ("pitman-yor", &[("a", -0.5), ("b", 2.0), ("mu", 0.3)], 0.25, 0.5, 0.7, 0.43186159561841139472),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.0)], 1.0, 1.0, 1.0, 0.44175569693377785341),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.0)], 0.5, 2.0, 1.3, 0.3881366007609080593),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.0)], 0.25, 0.5, 0.7, 0.82897000915474160854),
    ("cir", &[("a", 1.5), ("b", 0.8), ("sigma", 0.5), ("mu", 0.3), ("kappa", 0.0)], 1.0, 1.0, 1.0, 0.39862351463926445827),
    ("cir", &[("a", 1.5), ("b", 0.8), ("sigma", 0.5), ("mu", 0.3), ("kappa", 0.0)], 0.5, 2.0, 1.3, 0.4081662166382011917),
    ("cir", &[("a", 1.5), ("b", 0.8), ("sigma", 0.5), ("mu", 0.3), ("kappa", 0.0)], 0.25, 0.5, 0.7, 0.98818981526154710453),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.5), ("mu", 0.2), ("kappa", 0.3)], 1.0, 1.0, 1.0, 0.19385532150932163368),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.5), ("mu", 0.2), ("kappa", 0.3)], 0.5, 2.0, 1.3, 0.24363630598570471576),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.5), ("mu", 0.2), ("kappa", 0.3)], 0.25, 0.5, 0.7, 0.57438234658380143373),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.0)], 1.0, 1.0, 1.0, 0.21526928924893765916),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.0)], 0.5, 2.0, 1.3, 0.24128871946212565414),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.0)], 0.25, 0.5, 0.7, 0.60047719062438828512),
    ("rational-drift", &[("a", 2.0), ("mu", 0.5), ("nu", 0.0)], 1.0, 1.0, 1.0, 0.12384828173337699112),
    ("rational-drift", &[("a", 2.0), ("mu", 0.5), ("nu", 0.0)], 0.5, 2.0, 1.3, 0.15901228300523637453),
    ("rational-drift", &[("a", 2.0), ("mu", 0.5), ("nu", 0.0)], 0.25, 0.5, 0.7, 0.55564096584118122139),
    ("rational-drift", &[("a", 1.0), ("mu", 1.0), ("nu", 0.0)], 1.0, 1.0, 1.0, 0.073795538583879269473),
    ("rational-drift", &[("a", 1.0), ("mu", 1.0), ("nu", 0.0)], 0.5, 2.0, 1.3, 0.11369871984715166243),
    ("rational-drift", &[("a", 1.0), ("mu", 1.0), ("nu", 0.0)], 0.25, 0.5, 0.7, 0.49014684028408571827),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.3)], 1.0, 1.0, 1.0, 0.14324189316660207452),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.3)], 0.5, 2.0, 1.3, 0.21814260212979420068),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.3)], 0.25, 0.5, 0.7, 0.52117984790108715825),
    ("tanh-drift", &[("mu", 0.0)], 1.0, 1.0, 1.0, 0.073795538583879269473),
    ("tanh-drift", &[("mu", 0.0)], 0.5, 2.0, 1.3, 0.072198465943305904428),
    ("tanh-drift", &[("mu", 0.0)], 0.25, 0.5, 0.7, 0.5051723718970796677),
    ("tanh-drift", &[("mu", 0.5)], 1.0, 1.0, 1.0, 0.045326794595059691444),
    ("tanh-drift", &[("mu", 0.5)], 0.5, 2.0, 1.3, 0.048357058045703073807),
    ("tanh-drift", &[("mu", 0.5)], 0.25, 0.5, 0.7, 0.46781268084068746605),
    ("radial-ou", &[("a", 1.0), ("b", 0.5), ("mu", 0.0)], 1.0, 1.0, 1.0, 0.17929451296919912143),
    ("radial-ou", &[("a", 1.0), ("b", 0.5), ("mu", 0.0)], 0.5, 2.0, 1.3, 0.14316589561637873597),
    ("radial-ou", &[("a", 1.0), ("b", 0.5), ("mu", 0.0)], 0.25, 0.5, 0.7, 0.67933545889787111941),
    ("radial-ou", &[("a", 1.5), ("b", 0.5), ("mu", 0.3)], 1.0, 1.0, 1.0, 0.078474438525503676226),
    ("radial-ou", &[("a", 1.5), ("b", 0.5), ("mu", 0.3)], 0.5, 2.0, 1.3, 0.077526021914672750998),
    ("radial-ou", &[("a", 1.5), ("b", 0.5), ("mu", 0.3)], 0.25, 0.5, 0.7, 0.57250765739587744589),
    ("radial-ou", &[("a", 2.0), ("b", -0.5), ("mu", 0.7)], 1.0, 1.0, 1.0, 0.1195111154897100949),
    ("radial-ou", &[("a", 2.0), ("b", -0.5), ("mu", 0.7)], 0.5, 2.0, 1.3, 0.13598886602788452497),
    ("radial-ou", &[("a", 2.0), ("b", -0.5), ("mu", 0.7)], 0.25, 0.5, 0.7, 0.60641879818560853164),
    ("showcase", &[("a", 1.0), ("b", 2.0)], 1.0, 1.0, 1.0, 0.093239033304733380375),
    ("showcase", &[("a", 1.0), ("b", 2.0)], 0.5, 2.0, 1.3, 0.18684126790461502008),
    ("showcase", &[("a", 1.0), ("b", 2.0)], 0.25, 0.5, 0.7, 0.34940494218282711939),
    ("sqrt-drift", &[("a", 1.5), ("b", 0.6), ("A", 0.8), ("B", 0.4)], 1.0, 1.0, 1.0, 0.11340543250292855579),
    ("sqrt-drift", &[("a", 1.5), ("b", 0.6), ("A", 0.8), ("B", 0.4)], 0.5, 2.0, 1.3, 0.20555589461023323699),
    ("sqrt-drift", &[("a", 1.5), ("b", 0.6), ("A", 0.8), ("B", 0.4)], 0.25, 0.5, 0.7, 0.51935415416475492552),
    ("sqrt-drift", &[("a", 2.0), ("b", -0.3), ("A", 1.0), ("B", 0.2)], 1.0, 1.0, 1.0, 0.11547417517194434389),
    ("sqrt-drift", &[("a", 2.0), ("b", -0.3), ("A", 1.0), ("B", 0.2)], 0.5, 2.0, 1.3, 0.14188280947663361181),
    ("sqrt-drift", &[("a", 2.0), ("b", -0.3), ("A", 1.0), ("B", 0.2)], 0.25, 0.5, 0.7, 0.64901546091889630071),
    ("generic-a0", &[("sigma", 0.8), ("A", 1.2), ("B", -0.2), ("c1", 1.0), ("c2", 0.0), ("mu", 0.05)], 1.0, 1.0, 1.0, 0.13403352961061342521),
    ("generic-a0", &[("sigma", 0.8), ("A", 1.2), ("B", -0.2), ("c1", 1.0), ("c2", 0.0), ("mu", 0.05)], 0.5, 2.0, 1.3, 0.12560028865498399885),
    ("generic-a0", &[("sigma", 0.8), ("A", 1.2), ("B", -0.2), ("c1", 1.0), ("c2", 0.0), ("mu", 0.05)], 0.25, 0.5, 0.7, 0.74198200993024356032),
    ("generic-apos", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.3)], 1.0, 1.0, 1.0, 0.31919053243768595289),
    ("generic-apos", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.3)], 0.5, 2.0, 1.3, 0.3026749115375703193),
    ("generic-apos", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.3)], 0.25, 0.5, 0.7, 0.79131217871223542787),
];
pub const EXPECTATION: &[Row] = &[
    ("besq", &[("n", 3.0), ("mu", 0.0), ("b", 0.0)], 0.5, 1.0, 1.0, 0.27534765745159187381),
    ("besq", &[("n", 3.0), ("mu", 0.0), ("b", 0.0)], 2.0, 0.25, 2.0, 0.04784824825520546198),
    ("besq", &[("n", 2.5), ("mu", 0.7), ("b", 0.0)], 0.5, 1.0, 1.0, 0.13194301162488171654),
    ("besq", &[("n", 2.5), ("mu", 0.7), ("b", 0.0)], 2.0, 0.25, 2.0, 0.046367245984862234498),
    ("besq", &[("n", 4.0), ("mu", 1.2), ("b", 0.0)], 0.5, 1.0, 1.0, 0.075770894651590291958),
    ("besq", &[("n", 4.0), ("mu", 1.2), ("b", 0.0)], 2.0, 0.25, 2.0, 0.025765791132720934034),
    ("besq", &[("n", 2.0), ("mu", 0.0), ("b", 1.0)], 0.5, 1.0, 1.0, 0.22313016014842982893),
    ("besq", &[("n", 2.0), ("mu", 0.0), ("b", 1.0)], 2.0, 0.25, 2.0, 0.057376930128706178514),
    ("besq", &[("n", 3.0), ("mu", 0.5), ("b", 0.5)], 0.5, 1.0, 1.0, 0.12217901960579645958),
    ("besq", &[("n", 3.0), ("mu", 0.5), ("b", 0.5)], 2.0, 0.25, 2.0, 0.039908892899290117072),
    ("bessel", &[("a", 1.0), ("mu", 1.0)], 0.5, 1.0, 1.0, 0.19877785259908053561),
    ("bessel", &[("a", 1.0), ("mu", 1.0)], 2.0, 0.25, 2.0, 0.006260813784096831116),
    ("bessel", &[("a", 0.8), ("mu", 0.4)], 0.5, 1.0, 1.0, 0.26266762703841879893),
    ("bessel", &[("a", 0.8), ("mu", 0.4)], 2.0, 0.25, 2.0, 0.007333644557302155901),
    ("bessel", &[("a", 1.5), ("mu", 0.0)], 0.5, 1.0, 1.0, 0.19470019576785121706),
    ("bessel", &[("a", 1.5), ("mu", 0.0)], 2.0, 0.25, 2.0, 0.0045789097221835450734),
    ("pitman-yor", &[("a", 0.5), ("b", 1.0), ("mu", 0.0)], 0.5, 1.0, 1.0, 0.19017030279267221618),
    ("pitman-yor", &[("a", 0.5), ("b", 1.0), ("mu", 0.0)], 2.0, 0.25, 2.0, 0.0039422580869650376491),
    ("pitman-yor", &[("a", 1.0), ("b", 1.0), ("mu", 0.5)], 0.5, 1.0, 1.0, 0.091732556728666749526),
    ("pitman-yor", &[("a", 1.0), ("b", 1.0), ("mu", 0.5)], 2.0, 0.25, 2.0, 0.0028785964930954858631),
    ("pitman-yor", &[("a", -0.5), ("b", 2.0), ("mu", 0.3)], 0.5, 1.0, 1.0, 0.048610053891920495306),
    ("pitman-yor", &[("a", -0.5), ("b", 2.0), ("mu", 0.3)], 2.0, 0.25, 2.0, 0.0013384161277042096897),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.0)], 0.5, 1.0, 1.0, 0.50205244333363553665),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.0)], 2.0, 0.25, 2.0, 0.055445600622565937021),
    ("cir", &[("a", 1.5), ("b", 0.8), ("sigma", 0.5), ("mu", 0.3), ("kappa", 0.0)], 0.5, 1.0, 1.0, 0.36878091096470514842),
    ("cir", &[("a", 1.5), ("b", 0.8), ("sigma", 0.5), ("mu", 0.3), ("kappa", 0.0)], 2.0, 0.25, 2.0, 0.035745001208652741837),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.5), ("mu", 0.2), ("kappa", 0.3)], 0.5, 1.0, 1.0, 0.24798412337531178782),
    ("cir", &[("a", 2.0), ("b", 1.0), ("sigma", 1.5), ("mu", 0.2), ("kappa", 0.3)], 2.0, 0.25, 2.0, 0.066543122990505530167),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.0)], 0.5, 1.0, 1.0, 0.51749483541440334753),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.0)], 2.0, 0.25, 2.0, 0.043748839658800966342),
    ("rational-drift", &[("a", 2.0), ("mu", 0.5), ("nu", 0.0)], 0.5, 1.0, 1.0, 0.34112640892306465167),
    ("rational-drift", &[("a", 2.0), ("mu", 0.5), ("nu", 0.0)], 2.0, 0.25, 2.0, 0.03632278857007907092),
    ("rational-drift", &[("a", 1.0), ("mu", 1.0), ("nu", 0.0)], 0.5, 1.0, 1.0, 0.29681309249493228884),
    ("rational-drift", &[("a", 1.0), ("mu", 1.0), ("nu", 0.0)], 2.0, 0.25, 2.0, 0.034955874130273034083),
    ("tanh-drift", &[("mu", 0.0)], 0.5, 1.0, 1.0, 0.32512755233273628983),
    ("tanh-drift", &[("mu", 0.0)], 2.0, 0.25, 2.0, 0.021139791986855122629),
    ("tanh-drift", &[("mu", 0.5)], 0.5, 1.0, 1.0, 0.23772407202340271705),
    ("tanh-drift", &[("mu", 0.5)], 2.0, 0.25, 2.0, 0.017502423489075958353),
    ("radial-ou", &[("a", 1.0), ("b", 0.5), ("mu", 0.0)], 0.5, 1.0, 1.0, 0.16592323388963841364),
    ("radial-ou", &[("a", 1.0), ("b", 0.5), ("mu", 0.0)], 2.0, 0.25, 2.0, 0.013237587948656917733),
    ("radial-ou", &[("a", 1.5), ("b", 0.5), ("mu", 0.3)], 0.5, 1.0, 1.0, 0.067563478792284802197),
    ("radial-ou", &[("a", 1.5), ("b", 0.5), ("mu", 0.3)], 2.0, 0.25, 2.0, 0.0082944837363806193993),
    ("radial-ou", &[("a", 2.0), ("b", -0.5), ("mu", 0.7)], 0.5, 1.0, 1.0, 0.084508473181397585013),
    ("radial-ou", &[("a", 2.0), ("b", -0.5), ("mu", 0.7)], 2.0, 0.25, 2.0, 0.015424447004298849034),
    ("showcase", &[("a", 1.0), ("b", 2.0)], 0.5, 1.0, 1.0, 0.78729983507490423812),
    ("showcase", &[("a", 1.0), ("b", 2.0)], 2.0, 0.25, 2.0, 0.048466851778867737222),
    ("sqrt-drift", &[("a", 1.5), ("b", 0.6), ("A", 0.8), ("B", 0.4)], 0.5, 1.0, 1.0, 0.1457437899025510262),
    ("sqrt-drift", &[("a", 1.5), ("b", 0.6), ("A", 0.8), ("B", 0.4)], 2.0, 0.25, 2.0, 0.0402658735461633612),
    ("sqrt-drift", &[("a", 2.0), ("b", -0.3), ("A", 1.0), ("B", 0.2)], 0.5, 1.0, 1.0, 0.18982684489342088983),
    ("sqrt-drift", &[("a", 2.0), ("b", -0.3), ("A", 1.0), ("B", 0.2)], 2.0, 0.25, 2.0, 0.024229184621813129157),
    ("generic-a0", &[("sigma", 0.8), ("A", 1.2), ("B", -0.2), ("c1", 1.0), ("c2", 0.0), ("mu", 0.05)], 0.5, 1.0, 1.0, 0.24263788595046102609),
    ("generic-a0", &[("sigma", 0.8), ("A", 1.2), ("B", -0.2), ("c1", 1.0), ("c2", 0.0), ("mu", 0.05)], 2.0, 0.25, 2.0, 0.020193767724670215217),
    ("generic-apos", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.3)], 0.5, 1.0, 1.0, 0.3572861872229685909),
    ("generic-apos", &[("a", 2.0), ("b", 1.0), ("sigma", 1.0), ("mu", 0.0), ("kappa", 0.3)], 2.0, 0.25, 2.0, 0.049544292257876752666),
];
pub const TRANSFORM: &[Row] = &[
    ("besq", &[("n", 3.0), ("mu", 0.0), ("b", 0.0)], 0.5, 1.0, 1.0, 0.27534765745159187381),
    ("besq", &[("n", 3.0), ("mu", 0.0), ("b", 0.0)], 2.0, 0.25, 2.0, 0.04784824825520546198),
    ("besq", &[("n", 2.5), ("mu", 0.7), ("b", 0.0)], 0.5, 1.0, 1.0, 0.16840274705361261391),
    ("besq", &[("n", 2.5), ("mu", 0.7), ("b", 0.0)], 2.0, 0.25, 2.0, 0.040806437825922361709),
    ("besq", &[("n", 4.0), ("mu", 1.2), ("b", 0.0)], 0.5, 1.0, 1.0, 0.10847371104412547705),
    ("besq", &[("n", 4.0), ("mu", 1.2), ("b", 0.0)], 2.0, 0.25, 2.0, 0.025253995567008358921),
    ("bessel", &[("a", 1.0), ("mu", 1.0)], 0.5, 1.0, 1.0, 0.21364698101985484475),
    ("bessel", &[("a", 1.0), ("mu", 1.0)], 2.0, 0.25, 2.0, 0.0064755562299939902423),
    ("bessel", &[("a", 0.8), ("mu", 0.4)], 0.5, 1.0, 1.0, 0.26809379969315453126),
    ("bessel", &[("a", 0.8), ("mu", 0.4)], 2.0, 0.25, 2.0, 0.0074384607890848980421),
    ("bessel", &[("a", 1.5), ("mu", 0.0)], 0.5, 1.0, 1.0, 0.19470019576785121706),
    ("bessel", &[("a", 1.5), ("mu", 0.0)], 2.0, 0.25, 2.0, 0.0045789097221835450734),
    ("pitman-yor", &[("a", 0.5), ("b", 1.0), ("mu", 0.0)], 0.5, 1.0, 1.0, 0.19017030279267221618),
    ("pitman-yor", &[("a", 0.5), ("b", 1.0), ("mu", 0.0)], 2.0, 0.25, 2.0, 0.0039422580869650376491),
    ("pitman-yor", &[("a", 1.0), ("b", 1.0), ("mu", 0.5)], 0.5, 1.0, 1.0, 0.061826957241637020517),
    ("pitman-yor", &[("a", 1.0), ("b", 1.0), ("mu", 0.5)], 2.0, 0.25, 2.0, 0.001792398241203425082),
    ("pitman-yor", &[("a", -0.5), ("b", 2.0), ("mu", 0.3)], 0.5, 1.0, 1.0, 0.041730066488481707813),
    ("pitman-yor", &[("a", -0.5), ("b", 2.0), ("mu", 0.3)], 2.0, 0.25, 2.0, 0.0010921160676331910134),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.0)], 0.5, 1.0, 1.0, 0.17913282764344731261),
    ("rational-drift", &[("a", 2.0), ("mu", 0.0), ("nu", 0.0)], 2.0, 0.25, 2.0, 0.011580575203800255797),
    ("rational-drift", &[("a", 2.0), ("mu", 0.5), ("nu", 0.0)], 0.5, 1.0, 1.0, 0.11199537353270878188),
    ("rational-drift", &[("a", 2.0), ("mu", 0.5), ("nu", 0.0)], 2.0, 0.25, 2.0, 0.0056148427236794244157),
    ("rational-drift", &[("a", 1.0), ("mu", 1.0), ("nu", 0.0)], 0.5, 1.0, 1.0, 0.1159898703273085596),
    ("rational-drift", &[("a", 1.0), ("mu", 1.0), ("nu", 0.0)], 2.0, 0.25, 2.0, 0.0059321963525221383532),
    ("showcase", &[("a", 1.0), ("b", 2.0)], 0.5, 1.0, 1.0, 0.78729983507490423812),
    ("showcase", &[("a", 1.0), ("b", 2.0)], 2.0, 0.25, 2.0, 0.048466851778867737222),
    ("sqrt-drift", &[("a", 1.5), ("b", 0.6), ("A", 0.8), ("B", 0.4)], 0.5, 1.0, 1.0, 0.21537985648006313054),
    ("sqrt-drift", &[("a", 1.5), ("b", 0.6), ("A", 0.8), ("B", 0.4)], 2.0, 0.25, 2.0, 0.042638352459109486804),
    ("sqrt-drift", &[("a", 2.0), ("b", -0.3), ("A", 1.0), ("B", 0.2)], 0.5, 1.0, 1.0, 0.12455944828702134435),
    ("sqrt-drift", &[("a", 2.0), ("b", -0.3), ("A", 1.0), ("B", 0.2)], 2.0, 0.25, 2.0, 0.014195558422996414387),
    ("generic-a0", &[("sigma", 0.8), ("A", 1.2), ("B", -0.2), ("c1", 1.0), ("c2", 0.0), ("mu", 0.05)], 0.5, 1.0, 1.0, 0.22553034245075351584),
    ("generic-a0", &[("sigma", 0.8), ("A", 1.2), ("B", -0.2), ("c1", 1.0), ("c2", 0.0), ("mu", 0.05)], 2.0, 0.25, 2.0, 0.018651239371489180442),
];
