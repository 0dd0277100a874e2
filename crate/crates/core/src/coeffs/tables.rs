// Generated from the printed appendix closed forms. Do not edit by hand.

use super::{Expr, T};

pub static F1: Expr = Expr::new(
    "f1",
    4,
    &[
        T("-18", &[0, 1, 2, 0]),
        T("12", &[0, 2, 2, 0]),
        T("-6", &[1, 0, 3, 0]),
        T("40", &[1, 1, 1, 0]),
        T("33", &[1, 1, 3, 0]),
        T("-30", &[1, 2, 1, 0]),
        T("-57", &[1, 2, 3, 0]),
        T("30", &[1, 3, 3, 0]),
        T("6", &[2, 0, 2, 0]),
        T("-24", &[2, 1, 0, 0]),
        T("-53", &[2, 1, 2, 0]),
        T("20", &[2, 2, 0, 0]),
        T("137", &[2, 2, 2, 0]),
        T("-90", &[2, 3, 2, 0]),
        T("1", &[3, 0, 3, 0]),
        T("2", &[3, 1, 1, 0]),
        T("-7", &[3, 1, 3, 0]),
        T("-88", &[3, 2, 1, 0]),
        T("17", &[3, 2, 3, 0]),
        T("86", &[3, 3, 1, 0]),
        T("-17", &[3, 3, 3, 0]),
        T("6", &[3, 4, 3, 0]),
        T("-1", &[4, 0, 2, 0]),
        T("24", &[4, 1, 0, 0]),
        T("13", &[4, 1, 2, 0]),
        T("-2", &[4, 2, 0, 0]),
        T("-45", &[4, 2, 2, 0]),
        T("-22", &[4, 3, 0, 0]),
        T("55", &[4, 3, 2, 0]),
        T("-22", &[4, 4, 2, 0]),
        T("-4", &[5, 1, 1, 0]),
        T("36", &[5, 2, 1, 0]),
        T("-60", &[5, 3, 1, 0]),
        T("28", &[5, 4, 1, 0]),
        T("-6", &[6, 1, 0, 0]),
        T("2", &[6, 2, 0, 0]),
        T("14", &[6, 3, 0, 0]),
        T("-10", &[6, 4, 0, 0]),
    ],
    &[T("1", &[0, 0, 0, 0])],
);

pub static F2: Expr = Expr::new(
    "f2",
    4,
    &[
        T("15300", &[0, 1, 6, 0]),
        T("-14112", &[0, 2, 6, 0]),
        T("-71640", &[0, 3, 6, 0]),
        T("106218", &[0, 4, 6, 0]),
        T("-35964", &[0, 5, 6, 0]),
        T("4716", &[1, 0, 7, 0]),
        T("-100824", &[1, 1, 5, 0]),
        T("-22698", &[1, 1, 7, 0]),
        T("129360", &[1, 2, 5, 0]),
        T("-3186", &[1, 2, 7, 0]),
        T("438468", &[1, 3, 5, 0]),
        T("191826", &[1, 3, 7, 0]),
        T("-717654", &[1, 4, 5, 0]),
        T("-403857", &[1, 4, 7, 0]),
        T("250506", &[1, 5, 5, 0]),
        T("323109", &[1, 5, 7, 0]),
        T("-89910", &[1, 6, 7, 0]),
        T("-28356", &[2, 0, 6, 0]),
        T("237792", &[2, 1, 4, 0]),
        T("151050", &[2, 1, 6, 0]),
        T("-374504", &[2, 2, 4, 0]),
        T("-168150", &[2, 2, 6, 0]),
        T("-1163128", &[2, 3, 4, 0]),
        T("-650856", &[2, 3, 6, 0]),
        T("2040538", &[2, 4, 4, 0]),
        T("1985148", &[2, 4, 6, 0]),
        T("-729306", &[2, 5, 4, 0]),
        T("-1849680", &[2, 5, 6, 0]),
        T("560844", &[2, 6, 6, 0]),
        T("50184", &[3, 0, 5, 0]),
        T("-3546", &[3, 0, 7, 0]),
        T("-253200", &[3, 1, 3, 0]),
        T("-201136", &[3, 1, 5, 0]),
        T("-17052", &[3, 1, 7, 0]),
        T("492776", &[3, 2, 3, 0]),
        T("417480", &[3, 2, 5, 0]),
        T("321177", &[3, 2, 7, 0]),
        T("1700980", &[3, 3, 3, 0]),
        T("410108", &[3, 3, 5, 0]),
        T("-1348944", &[3, 3, 7, 0]),
        T("-3120294", &[3, 4, 3, 0]),
        T("-3252678", &[3, 4, 5, 0]),
        T("2655264", &[3, 4, 7, 0]),
        T("1135266", &[3, 5, 3, 0]),
        T("3931028", &[3, 5, 5, 0]),
        T("-2735790", &[3, 5, 7, 0]),
        T("-1354986", &[3, 6, 5, 0]),
        T("1422813", &[3, 6, 7, 0]),
        T("-293922", &[3, 7, 7, 0]),
        T("-31488", &[4, 0, 4, 0]),
        T("47818", &[4, 0, 6, 0]),
        T("115584", &[4, 1, 2, 0]),
        T("-182952", &[4, 1, 4, 0]),
        T("-187156", &[4, 1, 6, 0]),
        T("-325392", &[4, 2, 2, 0]),
        T("43796", &[4, 2, 4, 0]),
        T("-735450", &[4, 2, 6, 0]),
        T("-1425224", &[4, 3, 2, 0]),
        T("1423208", &[4, 3, 4, 0]),
        T("5968058", &[4, 3, 6, 0]),
        T("2699868", &[4, 4, 2, 0]),
        T("298588", &[4, 4, 4, 0]),
        T("-14640960", &[4, 4, 6, 0]),
        T("-995922", &[4, 5, 2, 0]),
        T("-2987900", &[4, 5, 4, 0]),
        T("17072078", &[4, 5, 6, 0]),
        T("1436748", &[4, 6, 4, 0]),
        T("-9628048", &[4, 6, 6, 0]),
        T("2103660", &[4, 7, 6, 0]),
        T("4944", &[5, 0, 3, 0]),
        T("-107768", &[5, 0, 5, 0]),
        T("-2078", &[5, 0, 7, 0]),
        T("-13632", &[5, 1, 1, 0]),
        T("549880", &[5, 1, 3, 0]),
        T("594764", &[5, 1, 5, 0]),
        T("74882", &[5, 1, 7, 0]),
        T("116864", &[5, 2, 1, 0]),
        T("-878328", &[5, 2, 3, 0]),
        T("235693", &[5, 2, 5, 0]),
        T("-627096", &[5, 2, 7, 0]),
        T("630816", &[5, 3, 1, 0]),
        T("-3520094", &[5, 3, 3, 0]),
        T("-10531464", &[5, 3, 5, 0]),
        T("2441190", &[5, 3, 7, 0]),
        T("-1248352", &[5, 4, 1, 0]),
        T("5819287", &[5, 4, 3, 0]),
        T("33086793", &[5, 4, 5, 0]),
        T("-5292870", &[5, 4, 7, 0]),
        T("466540", &[5, 5, 1, 0]),
        T("-1728483", &[5, 5, 3, 0]),
        T("-44151230", &[5, 5, 5, 0]),
        T("6785106", &[5, 5, 7, 0]),
        T("-247206", &[5, 6, 3, 0]),
        T("27175264", &[5, 6, 5, 0]),
        T("-5117896", &[5, 6, 7, 0]),
        T("-6302052", &[5, 7, 5, 0]),
        T("2101030", &[5, 7, 7, 0]),
        T("-362268", &[5, 8, 7, 0]),
        T("76936", &[6, 0, 4, 0]),
        T("-29486", &[6, 0, 6, 0]),
        T("-348304", &[6, 1, 2, 0]),
        T("-314448", &[6, 1, 4, 0]),
        T("6742", &[6, 1, 6, 0]),
        T("-27264", &[6, 2, 0, 0]),
        T("840256", &[6, 2, 2, 0]),
        T("41158", &[6, 2, 4, 0]),
        T("1848968", &[6, 2, 6, 0]),
        T("-108608", &[6, 3, 0, 0]),
        T("3593548", &[6, 3, 2, 0]),
        T("9008306", &[6, 3, 4, 0]),
        T("-10894374", &[6, 3, 6, 0]),
        T("239264", &[6, 4, 0, 0]),
        T("-7988952", &[6, 4, 2, 0]),
        T("-37765392", &[6, 4, 4, 0]),
        T("28858868", &[6, 4, 6, 0]),
        T("-91120", &[6, 5, 0, 0]),
        T("4759012", &[6, 5, 2, 0]),
        T("59566760", &[6, 5, 4, 0]),
        T("-41924564", &[6, 5, 6, 0]),
        T("-855560", &[6, 6, 2, 0]),
        T("-40728222", &[6, 6, 4, 0]),
        T("34513730", &[6, 6, 6, 0]),
        T("10114902", &[6, 7, 4, 0]),
        T("-15122484", &[6, 7, 6, 0]),
        T("2742600", &[6, 8, 6, 0]),
        T("-13440", &[7, 0, 3, 0]),
        T("91400", &[7, 0, 5, 0]),
        T("2425", &[7, 0, 7, 0]),
        T("47712", &[7, 1, 1, 0]),
        T("-421964", &[7, 1, 3, 0]),
        T("-497222", &[7, 1, 5, 0]),
        T("-53716", &[7, 1, 7, 0]),
        T("-327264", &[7, 2, 1, 0]),
        T("872746", &[7, 2, 3, 0]),
        T("-1521032", &[7, 2, 5, 0]),
        T("425400", &[7, 2, 7, 0]),
        T("-1742048", &[7, 3, 1, 0]),
        T("-2668196", &[7, 3, 3, 0]),
        T("19472104", &[7, 3, 5, 0]),
        T("-1750538", &[7, 3, 7, 0]),
        T("4468304", &[7, 4, 1, 0]),
        T("19890133", &[7, 4, 3, 0]),
        T("-65331308", &[7, 4, 5, 0]),
        T("4289715", &[7, 4, 7, 0]),
        T("-3191782", &[7, 5, 1, 0]),
        T("-42258130", &[7, 5, 3, 0]),
        T("108707402", &[7, 5, 5, 0]),
        T("-6622696", &[7, 5, 7, 0]),
        T("745078", &[7, 6, 1, 0]),
        T("33780779", &[7, 6, 3, 0]),
        T("-98157456", &[7, 6, 5, 0]),
        T("6519790", &[7, 6, 7, 0]),
        T("-9181928", &[7, 7, 3, 0]),
        T("46032964", &[7, 7, 5, 0]),
        T("-3978926", &[7, 7, 7, 0]),
        T("-8796852", &[7, 8, 5, 0]),
        T("1374022", &[7, 8, 7, 0]),
        T("-205476", &[7, 9, 7, 0]),
        T("-73660", &[8, 0, 4, 0]),
        T("8272", &[8, 0, 6, 0]),
        T("430296", &[8, 1, 2, 0]),
        T("527916", &[8, 1, 4, 0]),
        T("60122", &[8, 1, 6, 0]),
        T("95424", &[8, 2, 0, 0]),
        T("-1046884", &[8, 2, 2, 0]),
        T("222082", &[8, 2, 4, 0]),
        T("-1360084", &[8, 2, 6, 0]),
        T("270976", &[8, 3, 0, 0]),
        T("-1799432", &[8, 3, 2, 0]),
        T("-17789498", &[8, 3, 4, 0]),
        T("7856942", &[8, 3, 6, 0]),
        T("-913616", &[8, 4, 0, 0]),
        T("-188650", &[8, 4, 2, 0]),
        T("77852138", &[8, 4, 4, 0]),
        T("-23215530", &[8, 4, 6, 0]),
        T("742224", &[8, 5, 0, 0]),
        T("12301406", &[8, 5, 2, 0]),
        T("-150826134", &[8, 5, 4, 0]),
        T("40553514", &[8, 5, 6, 0]),
        T("-195008", &[8, 6, 0, 0]),
        T("-14186490", &[8, 6, 2, 0]),
        T("150905568", &[8, 6, 4, 0]),
        T("-43656336", &[8, 6, 6, 0]),
        T("4489754", &[8, 7, 2, 0]),
        T("-76232420", &[8, 7, 4, 0]),
        T("28529650", &[8, 7, 6, 0]),
        T("15414008", &[8, 8, 4, 0]),
        T("-10403186", &[8, 8, 6, 0]),
        T("1626636", &[8, 9, 6, 0]),
        T("13824", &[9, 0, 3, 0]),
        T("-38225", &[9, 0, 5, 0]),
        T("-695", &[9, 0, 7, 0]),
        T("-68160", &[9, 1, 1, 0]),
        T("97638", &[9, 1, 3, 0]),
        T("195546", &[9, 1, 5, 0]),
        T("14481", &[9, 1, 7, 0]),
        T("382048", &[9, 2, 1, 0]),
        T("-401202", &[9, 2, 3, 0]),
        T("1261078", &[9, 2, 5, 0]),
        T("-118566", &[9, 2, 7, 0]),
        T("1681112", &[9, 3, 1, 0]),
        T("8298632", &[9, 3, 3, 0]),
        T("-13879160", &[9, 3, 5, 0]),
        T("528852", &[9, 3, 7, 0]),
        T("-4239896", &[9, 4, 1, 0]),
        T("-49536546", &[9, 4, 3, 0]),
        T("51871365", &[9, 4, 5, 0]),
        T("-1458274", &[9, 4, 7, 0]),
        T("1301726", &[9, 5, 1, 0]),
        T("116885884", &[9, 5, 3, 0]),
        T("-104095536", &[9, 5, 5, 0]),
        T("2634122", &[9, 5, 7, 0]),
        T("1890508", &[9, 6, 1, 0]),
        T("-132844136", &[9, 6, 3, 0]),
        T("123374288", &[9, 6, 5, 0]),
        T("-3185356", &[9, 6, 7, 0]),
        T("-947338", &[9, 7, 1, 0]),
        T("73296798", &[9, 7, 3, 0]),
        T("-86657724", &[9, 7, 5, 0]),
        T("2562556", &[9, 7, 7, 0]),
        T("-15810892", &[9, 8, 3, 0]),
        T("33444974", &[9, 8, 5, 0]),
        T("-1318727", &[9, 8, 7, 0]),
        T("-5476606", &[9, 9, 5, 0]),
        T("393429", &[9, 9, 7, 0]),
        T("-51822", &[9, 10, 7, 0]),
        T("34284", &[10, 0, 4, 0]),
        T("-932", &[10, 0, 6, 0]),
        T("-282212", &[10, 1, 2, 0]),
        T("-302772", &[10, 1, 4, 0]),
        T("-24680", &[10, 1, 6, 0]),
        T("-136320", &[10, 2, 0, 0]),
        T("716672", &[10, 2, 2, 0]),
        T("-193650", &[10, 2, 4, 0]),
        T("407118", &[10, 2, 6, 0]),
        T("-202816", &[10, 3, 0, 0]),
        T("-911022", &[10, 3, 2, 0]),
        T("12408228", &[10, 3, 4, 0]),
        T("-2437892", &[10, 3, 6, 0]),
        T("1115656", &[10, 4, 0, 0]),
        T("13220918", &[10, 4, 2, 0]),
        T("-61205630", &[10, 4, 4, 0]),
        T("8005714", &[10, 4, 6, 0]),
        T("-1060660", &[10, 5, 0, 0]),
        T("-46510338", &[10, 5, 2, 0]),
        T("143419798", &[10, 5, 4, 0]),
        T("-16295660", &[10, 5, 6, 0]),
        T("267216", &[10, 6, 0, 0]),
        T("64492098", &[10, 6, 2, 0]),
        T("-188934326", &[10, 6, 4, 0]),
        T("21525950", &[10, 6, 6, 0]),
        T("16924", &[10, 7, 0, 0]),
        T("-40106292", &[10, 7, 2, 0]),
        T("143527112", &[10, 7, 4, 0]),
        T("-18548908", &[10, 7, 6, 0]),
        T("9380176", &[10, 8, 2, 0]),
        T("-58882486", &[10, 8, 4, 0]),
        T("10088762", &[10, 8, 6, 0]),
        T("10129442", &[10, 9, 4, 0]),
        T("-3150844", &[10, 9, 6, 0]),
        T("431372", &[10, 10, 6, 0]),
        T("-6756", &[11, 0, 3, 0]),
        T("7642", &[11, 0, 5, 0]),
        T("58", &[11, 0, 7, 0]),
        T("51120", &[11, 1, 1, 0]),
        T("31474", &[11, 1, 3, 0]),
        T("-35182", &[11, 1, 5, 0]),
        T("-1252", &[11, 1, 7, 0]),
        T("-234496", &[11, 2, 1, 0]),
        T("24646", &[11, 2, 3, 0]),
        T("-407578", &[11, 2, 5, 0]),
        T("10977", &[11, 2, 7, 0]),
        T("-854608", &[11, 3, 1, 0]),
        T("-5875322", &[11, 3, 3, 0]),
        T("4333094", &[11, 3, 5, 0]),
        T("-53658", &[11, 3, 7, 0]),
        T("1088932", &[11, 4, 1, 0]),
        T("39479708", &[11, 4, 3, 0]),
        T("-17936072", &[11, 4, 5, 0]),
        T("165788", &[11, 4, 7, 0]),
        T("6357864", &[11, 5, 1, 0]),
        T("-111443144", &[11, 5, 3, 0]),
        T("41977254", &[11, 5, 5, 0]),
        T("-344088", &[11, 5, 7, 0]),
        T("-14617184", &[11, 6, 1, 0]),
        T("166424286", &[11, 6, 3, 0]),
        T("-61144908", &[11, 6, 5, 0]),
        T("493434", &[11, 6, 7, 0]),
        T("11127224", &[11, 7, 1, 0]),
        T("-138436866", &[11, 7, 3, 0]),
        T("56732858", &[11, 7, 5, 0]),
        T("-491692", &[11, 7, 7, 0]),
        T("-2918852", &[11, 8, 1, 0]),
        T("60863332", &[11, 8, 3, 0]),
        T("-32720714", &[11, 8, 5, 0]),
        T("335058", &[11, 8, 7, 0]),
        T("-11061358", &[11, 9, 3, 0]),
        T("10721832", &[11, 9, 5, 0]),
        T("-149188", &[11, 9, 7, 0]),
        T("-1528226", &[11, 10, 5, 0]),
        T("39165", &[11, 10, 7, 0]),
        T("-4602", &[11, 11, 7, 0]),
        T("-7578", &[12, 0, 4, 0]),
        T("44", &[12, 0, 6, 0]),
        T("105554", &[12, 1, 2, 0]),
        T("75006", &[12, 1, 4, 0]),
        T("2436", &[12, 1, 6, 0]),
        T("102240", &[12, 2, 0, 0]),
        T("-285526", &[12, 2, 2, 0]),
        T("73994", &[12, 2, 4, 0]),
        T("-39412", &[12, 2, 6, 0]),
        T("15024", &[12, 3, 0, 0]),
        T("1137650", &[12, 3, 2, 0]),
        T("-3840814", &[12, 3, 4, 0]),
        T("254552", &[12, 3, 6, 0]),
        T("-609692", &[12, 4, 0, 0]),
        T("-12010472", &[12, 4, 2, 0]),
        T("21124822", &[12, 4, 4, 0]),
        T("-931876", &[12, 4, 6, 0]),
        T("364452", &[12, 5, 0, 0]),
        T("45766656", &[12, 5, 2, 0]),
        T("-57875614", &[12, 5, 4, 0]),
        T("2175196", &[12, 5, 6, 0]),
        T("880956", &[12, 6, 0, 0]),
        T("-81632518", &[12, 6, 2, 0]),
        T("93895274", &[12, 6, 4, 0]),
        T("-3404980", &[12, 6, 6, 0]),
        T("-1105060", &[12, 7, 0, 0]),
        T("76378122", &[12, 7, 2, 0]),
        T("-94427714", &[12, 7, 4, 0]),
        T("3633812", &[12, 7, 6, 0]),
        T("352080", &[12, 8, 0, 0]),
        T("-36544604", &[12, 8, 2, 0]),
        T("58021364", &[12, 8, 4, 0]),
        T("-2617592", &[12, 8, 6, 0]),
        T("7085138", &[12, 9, 2, 0]),
        T("-20017072", &[12, 9, 4, 0]),
        T("1220496", &[12, 9, 6, 0]),
        T("2978332", &[12, 10, 4, 0]),
        T("-333160", &[12, 10, 6, 0]),
        T("40484", &[12, 11, 6, 0]),
        T("1563", &[13, 0, 3, 0]),
        T("-593", &[13, 0, 5, 0]),
        T("-21300", &[13, 1, 1, 0]),
        T("-17849", &[13, 1, 3, 0]),
        T("2766", &[13, 1, 5, 0]),
        T("80832", &[13, 2, 1, 0]),
        T("19200", &[13, 2, 3, 0]),
        T("40532", &[13, 2, 5, 0]),
        T("287948", &[13, 3, 1, 0]),
        T("1807982", &[13, 3, 3, 0]),
        T("-460392", &[13, 3, 5, 0]),
        T("306420", &[13, 4, 1, 0]),
        T("-13652892", &[13, 4, 3, 0]),
        T("2126706", &[13, 4, 5, 0]),
        T("-7418484", &[13, 5, 1, 0]),
        T("44959348", &[13, 5, 3, 0]),
        T("-5712788", &[13, 5, 5, 0]),
        T("19214456", &[13, 6, 1, 0]),
        T("-82705986", &[13, 6, 3, 0]),
        T("9867756", &[13, 6, 5, 0]),
        T("-21616956", &[13, 7, 1, 0]),
        T("91245490", &[13, 7, 3, 0]),
        T("-11346432", &[13, 7, 5, 0]),
        T("11609268", &[13, 8, 1, 0]),
        T("-60233647", &[13, 8, 3, 0]),
        T("8672407", &[13, 8, 5, 0]),
        T("-2442184", &[13, 9, 1, 0]),
        T("22010917", &[13, 9, 3, 0]),
        T("-4245226", &[13, 9, 5, 0]),
        T("-3434126", &[13, 10, 3, 0]),
        T("1207176", &[13, 10, 5, 0]),
        T("-151912", &[13, 11, 5, 0]),
        T("626", &[14, 0, 4, 0]),
        T("-21870", &[14, 1, 2, 0]),
        T("-6932", &[14, 1, 4, 0]),
        T("-42600", &[14, 2, 0, 0]),
        T("70306", &[14, 2, 2, 0]),
        T("-6706", &[14, 2, 4, 0]),
        T("47428", &[14, 3, 0, 0]),
        T("-428670", &[14, 3, 2, 0]),
        T("413566", &[14, 3, 4, 0]),
        T("146420", &[14, 4, 0, 0]),
        T("4343322", &[14, 4, 2, 0]),
        T("-2551456", &[14, 4, 4, 0]),
        T("136448", &[14, 5, 0, 0]),
        T("-18547338", &[14, 5, 2, 0]),
        T("8029116", &[14, 5, 4, 0]),
        T("-1467552", &[14, 6, 0, 0]),
        T("40424510", &[14, 6, 2, 0]),
        T("-15451208", &[14, 6, 4, 0]),
        T("2302948", &[14, 7, 0, 0]),
        T("-50187706", &[14, 7, 2, 0]),
        T("19264736", &[14, 7, 4, 0]),
        T("-1467500", &[14, 8, 0, 0]),
        T("36160430", &[14, 8, 2, 0]),
        T("-15696066", &[14, 8, 4, 0]),
        T("344408", &[14, 9, 0, 0]),
        T("-14143952", &[14, 9, 2, 0]),
        T("8094776", &[14, 9, 4, 0]),
        T("2330968", &[14, 10, 2, 0]),
        T("-2404502", &[14, 10, 4, 0]),
        T("314050", &[14, 11, 4, 0]),
        T("-135", &[15, 0, 3, 0]),
        T("4686", &[15, 1, 1, 0]),
        T("2184", &[15, 1, 3, 0]),
        T("-15626", &[15, 2, 1, 0]),
        T("-3781", &[15, 2, 3, 0]),
        T("-59752", &[15, 3, 1, 0]),
        T("-198292", &[15, 3, 3, 0]),
        T("-209984", &[15, 4, 1, 0]),
        T("1682050", &[15, 4, 3, 0]),
        T("3022228", &[15, 5, 1, 0]),
        T("-6341800", &[15, 5, 3, 0]),
        T("-9366676", &[15, 6, 1, 0]),
        T("13820510", &[15, 6, 3, 0]),
        T("14016856", &[15, 7, 1, 0]),
        T("-18904544", &[15, 7, 3, 0]),
        T("-11399408", &[15, 8, 1, 0]),
        T("16559477", &[15, 8, 3, 0]),
        T("4864814", &[15, 9, 1, 0]),
        T("-9054880", &[15, 9, 3, 0]),
        T("-857138", &[15, 10, 1, 0]),
        T("2823415", &[15, 10, 3, 0]),
        T("-384204", &[15, 11, 3, 0]),
        T("2008", &[16, 1, 2, 0]),
        T("9372", &[16, 2, 0, 0]),
        T("-8574", &[16, 2, 2, 0]),
        T("-21604", &[16, 3, 0, 0]),
        T("59598", &[16, 3, 2, 0]),
        T("-4164", &[16, 4, 0, 0]),
        T("-569536", &[16, 4, 2, 0]),
        T("-113780", &[16, 5, 0, 0]),
        T("2669408", &[16, 5, 2, 0]),
        T("731460", &[16, 6, 0, 0]),
        T("-6819372", &[16, 6, 2, 0]),
        T("-1473452", &[16, 7, 0, 0]),
        T("10476284", &[16, 7, 2, 0]),
        T("1423124", &[16, 8, 0, 0]),
        T("-10024048", &[16, 8, 2, 0]),
        T("-681596", &[16, 9, 0, 0]),
        T("5876856", &[16, 9, 2, 0]),
        T("130640", &[16, 10, 0, 0]),
        T("-1939238", &[16, 10, 2, 0]),
        T("276614", &[16, 11, 2, 0]),
        T("-426", &[17, 1, 1, 0]),
        T("1440", &[17, 2, 1, 0]),
        T("4878", &[17, 3, 1, 0]),
        T("31488", &[17, 4, 1, 0]),
        T("-426260", &[17, 5, 1, 0]),
        T("1549056", &[17, 6, 1, 0]),
        T("-2886900", &[17, 7, 1, 0]),
        T("3137152", &[17, 8, 1, 0]),
        T("-2017218", &[17, 9, 1, 0]),
        T("714720", &[17, 10, 1, 0]),
        T("-107930", &[17, 11, 1, 0]),
        T("-852", &[18, 2, 0, 0]),
        T("2972", &[18, 3, 0, 0]),
        T("-2928", &[18, 4, 0, 0]),
        T("20368", &[18, 5, 0, 0]),
        T("-119800", &[18, 6, 0, 0]),
        T("295272", &[18, 7, 0, 0]),
        T("-382832", &[18, 8, 0, 0]),
        T("278288", &[18, 9, 0, 0]),
        T("-107988", &[18, 10, 0, 0]),
        T("17500", &[18, 11, 0, 0]),
    ],
    &[T("1", &[0, 0, 0, 0])],
);

pub static A02: Expr = Expr::new(
    "a02",
    4,
    &[
        T("-3", &[0, 0, 3, 0]),
        T("8", &[1, 0, 2, 0]),
        T("6", &[2, 0, 3, 0]),
        T("-6", &[2, 1, 3, 0]),
        T("-16", &[3, 0, 2, 0]),
        T("16", &[3, 1, 2, 0]),
        T("-3", &[4, 0, 3, 0]),
        T("6", &[4, 1, 3, 0]),
        T("-3", &[4, 2, 3, 0]),
        T("8", &[5, 0, 2, 0]),
        T("-16", &[5, 1, 2, 0]),
        T("8", &[5, 2, 2, 0]),
    ],
    &[
        T("-4", &[1, 0, 1, 3]),
        T("4", &[1, 1, 1, 3]),
        T("4", &[2, 0, 0, 3]),
        T("-4", &[2, 1, 0, 3]),
    ],
);

pub static A03: Expr = Expr::new(
    "a03",
    4,
    &[
        T("2", &[0, 0, 4, 0]),
        T("5", &[0, 1, 4, 0]),
        T("-18", &[0, 2, 4, 0]),
        T("-4", &[1, 0, 3, 0]),
        T("42", &[1, 2, 3, 0]),
        T("-1", &[2, 0, 4, 0]),
        T("-8", &[2, 1, 2, 0]),
        T("-9", &[2, 1, 4, 0]),
        T("-24", &[2, 2, 2, 0]),
        T("34", &[2, 2, 4, 0]),
        T("-24", &[2, 3, 4, 0]),
        T("2", &[3, 0, 3, 0]),
        T("10", &[3, 1, 3, 0]),
        T("-72", &[3, 2, 3, 0]),
        T("60", &[3, 3, 3, 0]),
        T("-1", &[4, 0, 4, 0]),
        T("4", &[4, 1, 2, 0]),
        T("7", &[4, 1, 4, 0]),
        T("32", &[4, 2, 2, 0]),
        T("-17", &[4, 2, 4, 0]),
        T("-36", &[4, 3, 2, 0]),
        T("17", &[4, 3, 4, 0]),
        T("-6", &[4, 4, 4, 0]),
        T("2", &[5, 0, 3, 0]),
        T("-16", &[5, 1, 3, 0]),
        T("44", &[5, 2, 3, 0]),
        T("-48", &[5, 3, 3, 0]),
        T("18", &[5, 4, 3, 0]),
        T("4", &[6, 1, 2, 0]),
        T("-20", &[6, 2, 2, 0]),
        T("28", &[6, 3, 2, 0]),
        T("-12", &[6, 4, 2, 0]),
    ],
    &[
        T("4", &[2, 0, 2, 4]),
        T("-8", &[2, 1, 2, 4]),
        T("4", &[2, 2, 2, 4]),
        T("-8", &[3, 0, 1, 4]),
        T("16", &[3, 1, 1, 4]),
        T("-8", &[3, 2, 1, 4]),
        T("4", &[4, 0, 0, 4]),
        T("-8", &[4, 1, 0, 4]),
        T("4", &[4, 2, 0, 4]),
    ],
);

pub static A04: Expr = Expr::new(
    "a04",
    4,
    &[
        T("2", &[0, 0, 5, 0]),
        T("-2", &[0, 1, 5, 0]),
        T("-16", &[0, 2, 5, 0]),
        T("24", &[0, 3, 5, 0]),
        T("-4", &[1, 0, 4, 0]),
        T("13", &[1, 1, 4, 0]),
        T("36", &[1, 2, 4, 0]),
        T("-92", &[1, 3, 4, 0]),
        T("-2", &[2, 0, 5, 0]),
        T("-16", &[2, 1, 3, 0]),
        T("2", &[2, 1, 5, 0]),
        T("-4", &[2, 2, 3, 0]),
        T("24", &[2, 2, 5, 0]),
        T("112", &[2, 3, 3, 0]),
        T("-56", &[2, 3, 5, 0]),
        T("32", &[2, 4, 5, 0]),
        T("4", &[3, 0, 4, 0]),
        T("-10", &[3, 1, 4, 0]),
        T("-16", &[3, 2, 2, 0]),
        T("-66", &[3, 2, 4, 0]),
        T("-44", &[3, 3, 2, 0]),
        T("208", &[3, 3, 4, 0]),
        T("-136", &[3, 4, 4, 0]),
        T("16", &[4, 1, 3, 0]),
        T("2", &[4, 1, 5, 0]),
        T("16", &[4, 2, 3, 0]),
        T("-12", &[4, 2, 5, 0]),
        T("-208", &[4, 3, 3, 0]),
        T("26", &[4, 3, 5, 0]),
        T("176", &[4, 4, 3, 0]),
        T("-24", &[4, 4, 5, 0]),
        T("8", &[4, 5, 5, 0]),
        T("-7", &[5, 1, 4, 0]),
        T("16", &[5, 2, 2, 0]),
        T("50", &[5, 2, 4, 0]),
        T("56", &[5, 3, 2, 0]),
        T("-123", &[5, 3, 4, 0]),
        T("-72", &[5, 4, 2, 0]),
        T("124", &[5, 4, 4, 0]),
        T("-44", &[5, 5, 4, 0]),
        T("-28", &[6, 2, 3, 0]),
        T("120", &[6, 3, 3, 0]),
        T("-156", &[6, 4, 3, 0]),
        T("64", &[6, 5, 3, 0]),
        T("-28", &[7, 3, 2, 0]),
        T("56", &[7, 4, 2, 0]),
        T("-28", &[7, 5, 2, 0]),
    ],
    &[
        T("-8", &[3, 0, 3, 5]),
        T("24", &[3, 1, 3, 5]),
        T("-24", &[3, 2, 3, 5]),
        T("8", &[3, 3, 3, 5]),
        T("24", &[4, 0, 2, 5]),
        T("-72", &[4, 1, 2, 5]),
        T("72", &[4, 2, 2, 5]),
        T("-24", &[4, 3, 2, 5]),
        T("-24", &[5, 0, 1, 5]),
        T("72", &[5, 1, 1, 5]),
        T("-72", &[5, 2, 1, 5]),
        T("24", &[5, 3, 1, 5]),
        T("8", &[6, 0, 0, 5]),
        T("-24", &[6, 1, 0, 5]),
        T("24", &[6, 2, 0, 5]),
        T("-8", &[6, 3, 0, 5]),
    ],
);

pub static A05: Expr = Expr::new(
    "a05",
    4,
    &[
        T("-1", &[0, 1, 5, 0]),
        T("6", &[0, 2, 5, 0]),
        T("-12", &[0, 3, 5, 0]),
        T("8", &[0, 4, 5, 0]),
        T("-6", &[1, 2, 4, 0]),
        T("24", &[1, 3, 4, 0]),
        T("-24", &[1, 4, 4, 0]),
        T("2", &[2, 1, 5, 0]),
        T("-14", &[2, 2, 5, 0]),
        T("-12", &[2, 3, 3, 0]),
        T("36", &[2, 3, 5, 0]),
        T("24", &[2, 4, 3, 0]),
        T("-40", &[2, 4, 5, 0]),
        T("16", &[2, 5, 5, 0]),
        T("12", &[3, 2, 4, 0]),
        T("-60", &[3, 3, 4, 0]),
        T("-8", &[3, 4, 2, 0]),
        T("96", &[3, 4, 4, 0]),
        T("-48", &[3, 5, 4, 0]),
        T("-1", &[4, 1, 5, 0]),
        T("8", &[4, 2, 5, 0]),
        T("24", &[4, 3, 3, 0]),
        T("-25", &[4, 3, 5, 0]),
        T("-72", &[4, 4, 3, 0]),
        T("38", &[4, 4, 5, 0]),
        T("48", &[4, 5, 3, 0]),
        T("-28", &[4, 5, 5, 0]),
        T("8", &[4, 6, 5, 0]),
        T("-6", &[5, 2, 4, 0]),
        T("36", &[5, 3, 4, 0]),
        T("16", &[5, 4, 2, 0]),
        T("-78", &[5, 4, 4, 0]),
        T("-16", &[5, 5, 2, 0]),
        T("72", &[5, 5, 4, 0]),
        T("-24", &[5, 6, 4, 0]),
        T("-12", &[6, 3, 3, 0]),
        T("48", &[6, 4, 3, 0]),
        T("-60", &[6, 5, 3, 0]),
        T("24", &[6, 6, 3, 0]),
        T("-8", &[7, 4, 2, 0]),
        T("16", &[7, 5, 2, 0]),
        T("-8", &[7, 6, 2, 0]),
    ],
    &[
        T("8", &[3, 0, 4, 6]),
        T("-32", &[3, 1, 4, 6]),
        T("48", &[3, 2, 4, 6]),
        T("-32", &[3, 3, 4, 6]),
        T("8", &[3, 4, 4, 6]),
        T("-32", &[4, 0, 3, 6]),
        T("128", &[4, 1, 3, 6]),
        T("-192", &[4, 2, 3, 6]),
        T("128", &[4, 3, 3, 6]),
        T("-32", &[4, 4, 3, 6]),
        T("48", &[5, 0, 2, 6]),
        T("-192", &[5, 1, 2, 6]),
        T("288", &[5, 2, 2, 6]),
        T("-192", &[5, 3, 2, 6]),
        T("48", &[5, 4, 2, 6]),
        T("-32", &[6, 0, 1, 6]),
        T("128", &[6, 1, 1, 6]),
        T("-192", &[6, 2, 1, 6]),
        T("128", &[6, 3, 1, 6]),
        T("-32", &[6, 4, 1, 6]),
        T("8", &[7, 0, 0, 6]),
        T("-32", &[7, 1, 0, 6]),
        T("48", &[7, 2, 0, 6]),
        T("-32", &[7, 3, 0, 6]),
        T("8", &[7, 4, 0, 6]),
    ],
);

pub static A11: Expr = Expr::new(
    "a11",
    4,
    &[
        T("3", &[0, 0, 2, 0]),
        T("6", &[0, 1, 2, 0]),
        T("-8", &[1, 0, 1, 0]),
        T("-8", &[1, 1, 1, 0]),
        T("-1", &[2, 0, 2, 0]),
        T("-1", &[2, 1, 2, 0]),
        T("2", &[2, 2, 2, 0]),
        T("4", &[3, 0, 1, 0]),
        T("-4", &[3, 2, 1, 0]),
    ],
    &[
        T("-2", &[1, 0, 1, 2]),
        T("2", &[1, 1, 1, 2]),
        T("2", &[2, 0, 0, 2]),
        T("-2", &[2, 1, 0, 2]),
    ],
);

pub static A12: Expr = Expr::new(
    "a12",
    4,
    &[
        T("-9", &[0, 1, 3, 0]),
        T("18", &[0, 2, 3, 0]),
        T("12", &[1, 1, 2, 0]),
        T("-42", &[1, 2, 2, 0]),
        T("-2", &[2, 0, 3, 0]),
        T("11", &[2, 1, 3, 0]),
        T("24", &[2, 2, 1, 0]),
        T("-19", &[2, 2, 3, 0]),
        T("10", &[2, 3, 3, 0]),
        T("4", &[3, 0, 2, 0]),
        T("-24", &[3, 1, 2, 0]),
        T("46", &[3, 2, 2, 0]),
        T("-26", &[3, 3, 2, 0]),
        T("8", &[4, 1, 1, 0]),
        T("-24", &[4, 2, 1, 0]),
        T("16", &[4, 3, 1, 0]),
    ],
    &[
        T("4", &[2, 0, 2, 3]),
        T("-8", &[2, 1, 2, 3]),
        T("4", &[2, 2, 2, 3]),
        T("-8", &[3, 0, 1, 3]),
        T("16", &[3, 1, 1, 3]),
        T("-8", &[3, 2, 1, 3]),
        T("4", &[4, 0, 0, 3]),
        T("-8", &[4, 1, 0, 3]),
        T("4", &[4, 2, 0, 3]),
    ],
);

pub static A13: Expr = Expr::new(
    "a13",
    4,
    &[
        T("-2", &[0, 0, 4, 0]),
        T("1", &[0, 1, 4, 0]),
        T("20", &[0, 2, 4, 0]),
        T("-28", &[0, 3, 4, 0]),
        T("4", &[1, 0, 3, 0]),
        T("-10", &[1, 1, 3, 0]),
        T("-52", &[1, 2, 3, 0]),
        T("112", &[1, 3, 3, 0]),
        T("16", &[2, 1, 2, 0]),
        T("3", &[2, 1, 4, 0]),
        T("16", &[2, 2, 2, 0]),
        T("-15", &[2, 2, 4, 0]),
        T("-140", &[2, 3, 2, 0]),
        T("24", &[2, 3, 4, 0]),
        T("-12", &[2, 4, 4, 0]),
        T("-10", &[3, 1, 3, 0]),
        T("16", &[3, 2, 1, 0]),
        T("62", &[3, 2, 3, 0]),
        T("56", &[3, 3, 1, 0]),
        T("-116", &[3, 3, 3, 0]),
        T("64", &[3, 4, 3, 0]),
        T("-40", &[4, 2, 2, 0]),
        T("132", &[4, 3, 2, 0]),
        T("-92", &[4, 4, 2, 0]),
        T("-40", &[5, 3, 1, 0]),
        T("40", &[5, 4, 1, 0]),
    ],
    &[
        T("-4", &[3, 0, 3, 4]),
        T("12", &[3, 1, 3, 4]),
        T("-12", &[3, 2, 3, 4]),
        T("4", &[3, 3, 3, 4]),
        T("12", &[4, 0, 2, 4]),
        T("-36", &[4, 1, 2, 4]),
        T("36", &[4, 2, 2, 4]),
        T("-12", &[4, 3, 2, 4]),
        T("-12", &[5, 0, 1, 4]),
        T("36", &[5, 1, 1, 4]),
        T("-36", &[5, 2, 1, 4]),
        T("12", &[5, 3, 1, 4]),
        T("4", &[6, 0, 0, 4]),
        T("-12", &[6, 1, 0, 4]),
        T("12", &[6, 2, 0, 4]),
        T("-4", &[6, 3, 0, 4]),
    ],
);

pub static A14: Expr = Expr::new(
    "a14",
    4,
    &[
        T("1", &[0, 1, 4, 0]),
        T("-6", &[0, 2, 4, 0]),
        T("12", &[0, 3, 4, 0]),
        T("-8", &[0, 4, 4, 0]),
        T("6", &[1, 2, 3, 0]),
        T("-24", &[1, 3, 3, 0]),
        T("24", &[1, 4, 3, 0]),
        T("-1", &[2, 1, 4, 0]),
        T("7", &[2, 2, 4, 0]),
        T("12", &[2, 3, 2, 0]),
        T("-18", &[2, 3, 4, 0]),
        T("-24", &[2, 4, 2, 0]),
        T("20", &[2, 4, 4, 0]),
        T("-8", &[2, 5, 4, 0]),
        T("-6", &[3, 2, 3, 0]),
        T("30", &[3, 3, 3, 0]),
        T("8", &[3, 4, 1, 0]),
        T("-48", &[3, 4, 3, 0]),
        T("24", &[3, 5, 3, 0]),
        T("-12", &[4, 3, 2, 0]),
        T("36", &[4, 4, 2, 0]),
        T("-24", &[4, 5, 2, 0]),
        T("-8", &[5, 4, 1, 0]),
        T("8", &[5, 5, 1, 0]),
    ],
    &[
        T("2", &[3, 0, 4, 5]),
        T("-8", &[3, 1, 4, 5]),
        T("12", &[3, 2, 4, 5]),
        T("-8", &[3, 3, 4, 5]),
        T("2", &[3, 4, 4, 5]),
        T("-8", &[4, 0, 3, 5]),
        T("32", &[4, 1, 3, 5]),
        T("-48", &[4, 2, 3, 5]),
        T("32", &[4, 3, 3, 5]),
        T("-8", &[4, 4, 3, 5]),
        T("12", &[5, 0, 2, 5]),
        T("-48", &[5, 1, 2, 5]),
        T("72", &[5, 2, 2, 5]),
        T("-48", &[5, 3, 2, 5]),
        T("12", &[5, 4, 2, 5]),
        T("-8", &[6, 0, 1, 5]),
        T("32", &[6, 1, 1, 5]),
        T("-48", &[6, 2, 1, 5]),
        T("32", &[6, 3, 1, 5]),
        T("-8", &[6, 4, 1, 5]),
        T("2", &[7, 0, 0, 5]),
        T("-8", &[7, 1, 0, 5]),
        T("12", &[7, 2, 0, 5]),
        T("-8", &[7, 3, 0, 5]),
        T("2", &[7, 4, 0, 5]),
    ],
);

pub static A20: Expr = Expr::new(
    "a20",
    4,
    &[
        T("1", &[0, 0, 1, 0]),
        T("-4", &[0, 1, 1, 0]),
        T("8", &[1, 1, 0, 0]),
    ],
    &[
        T("-4", &[1, 0, 1, 1]),
        T("4", &[1, 1, 1, 1]),
        T("4", &[2, 0, 0, 1]),
        T("-4", &[2, 1, 0, 1]),
    ],
);

pub static A21: Expr = Expr::new(
    "a21",
    4,
    &[
        T("-2", &[0, 0, 2, 0]),
        T("3", &[0, 1, 2, 0]),
        T("2", &[0, 2, 2, 0]),
        T("4", &[1, 0, 1, 0]),
        T("-8", &[1, 1, 1, 0]),
        T("-10", &[1, 2, 1, 0]),
        T("1", &[2, 0, 2, 0]),
        T("8", &[2, 1, 0, 0]),
        T("-4", &[2, 1, 2, 0]),
        T("8", &[2, 2, 0, 0]),
        T("5", &[2, 2, 2, 0]),
        T("-2", &[2, 3, 2, 0]),
        T("-2", &[3, 0, 1, 0]),
        T("6", &[3, 1, 1, 0]),
        T("-2", &[3, 2, 1, 0]),
        T("-2", &[3, 3, 1, 0]),
        T("-4", &[4, 1, 0, 0]),
        T("4", &[4, 3, 0, 0]),
    ],
    &[
        T("4", &[2, 0, 2, 2]),
        T("-8", &[2, 1, 2, 2]),
        T("4", &[2, 2, 2, 2]),
        T("-8", &[3, 0, 1, 2]),
        T("16", &[3, 1, 1, 2]),
        T("-8", &[3, 2, 1, 2]),
        T("4", &[4, 0, 0, 2]),
        T("-4", &[4, 0, 2, 2]),
        T("-8", &[4, 1, 0, 2]),
        T("12", &[4, 1, 2, 2]),
        T("4", &[4, 2, 0, 2]),
        T("-12", &[4, 2, 2, 2]),
        T("4", &[4, 3, 2, 2]),
        T("8", &[5, 0, 1, 2]),
        T("-24", &[5, 1, 1, 2]),
        T("24", &[5, 2, 1, 2]),
        T("-8", &[5, 3, 1, 2]),
        T("-4", &[6, 0, 0, 2]),
        T("12", &[6, 1, 0, 2]),
        T("-12", &[6, 2, 0, 2]),
        T("4", &[6, 3, 0, 2]),
    ],
);

pub static A22: Expr = Expr::new(
    "a22",
    4,
    &[
        T("1", &[0, 0, 3, 0]),
        T("1", &[0, 1, 3, 0]),
        T("-16", &[0, 2, 3, 0]),
        T("20", &[0, 3, 3, 0]),
        T("-2", &[1, 0, 2, 0]),
        T("1", &[1, 1, 2, 0]),
        T("48", &[1, 2, 2, 0]),
        T("-84", &[1, 3, 2, 0]),
        T("-8", &[2, 1, 1, 0]),
        T("-3", &[2, 1, 3, 0]),
        T("-24", &[2, 2, 1, 0]),
        T("15", &[2, 2, 3, 0]),
        T("108", &[2, 3, 1, 0]),
        T("-24", &[2, 3, 3, 0]),
        T("12", &[2, 4, 3, 0]),
        T("9", &[3, 1, 2, 0]),
        T("-8", &[3, 2, 0, 0]),
        T("-57", &[3, 2, 2, 0]),
        T("-44", &[3, 3, 0, 0]),
        T("108", &[3, 3, 2, 0]),
        T("-60", &[3, 4, 2, 0]),
        T("36", &[4, 2, 1, 0]),
        T("-120", &[4, 3, 1, 0]),
        T("84", &[4, 4, 1, 0]),
        T("36", &[5, 3, 0, 0]),
        T("-36", &[5, 4, 0, 0]),
    ],
    &[
        T("-4", &[3, 0, 3, 3]),
        T("12", &[3, 1, 3, 3]),
        T("-12", &[3, 2, 3, 3]),
        T("4", &[3, 3, 3, 3]),
        T("12", &[4, 0, 2, 3]),
        T("-36", &[4, 1, 2, 3]),
        T("36", &[4, 2, 2, 3]),
        T("-12", &[4, 3, 2, 3]),
        T("-12", &[5, 0, 1, 3]),
        T("4", &[5, 0, 3, 3]),
        T("36", &[5, 1, 1, 3]),
        T("-16", &[5, 1, 3, 3]),
        T("-36", &[5, 2, 1, 3]),
        T("24", &[5, 2, 3, 3]),
        T("12", &[5, 3, 1, 3]),
        T("-16", &[5, 3, 3, 3]),
        T("4", &[5, 4, 3, 3]),
        T("4", &[6, 0, 0, 3]),
        T("-12", &[6, 0, 2, 3]),
        T("-12", &[6, 1, 0, 3]),
        T("48", &[6, 1, 2, 3]),
        T("12", &[6, 2, 0, 3]),
        T("-72", &[6, 2, 2, 3]),
        T("-4", &[6, 3, 0, 3]),
        T("48", &[6, 3, 2, 3]),
        T("-12", &[6, 4, 2, 3]),
        T("12", &[7, 0, 1, 3]),
        T("-48", &[7, 1, 1, 3]),
        T("72", &[7, 2, 1, 3]),
        T("-48", &[7, 3, 1, 3]),
        T("12", &[7, 4, 1, 3]),
        T("-4", &[8, 0, 0, 3]),
        T("16", &[8, 1, 0, 3]),
        T("-24", &[8, 2, 0, 3]),
        T("16", &[8, 3, 0, 3]),
        T("-4", &[8, 4, 0, 3]),
    ],
);

pub static A23: Expr = Expr::new(
    "a23",
    4,
    &[
        T("-3", &[0, 1, 3, 0]),
        T("18", &[0, 2, 3, 0]),
        T("-36", &[0, 3, 3, 0]),
        T("24", &[0, 4, 3, 0]),
        T("-18", &[1, 2, 2, 0]),
        T("72", &[1, 3, 2, 0]),
        T("-72", &[1, 4, 2, 0]),
        T("-36", &[2, 3, 1, 0]),
        T("72", &[2, 4, 1, 0]),
        T("-24", &[3, 4, 0, 0]),
    ],
    &[
        T("4", &[3, 0, 4, 4]),
        T("-16", &[3, 1, 4, 4]),
        T("24", &[3, 2, 4, 4]),
        T("-16", &[3, 3, 4, 4]),
        T("4", &[3, 4, 4, 4]),
        T("-16", &[4, 0, 3, 4]),
        T("64", &[4, 1, 3, 4]),
        T("-96", &[4, 2, 3, 4]),
        T("64", &[4, 3, 3, 4]),
        T("-16", &[4, 4, 3, 4]),
        T("24", &[5, 0, 2, 4]),
        T("-96", &[5, 1, 2, 4]),
        T("144", &[5, 2, 2, 4]),
        T("-96", &[5, 3, 2, 4]),
        T("24", &[5, 4, 2, 4]),
        T("-16", &[6, 0, 1, 4]),
        T("64", &[6, 1, 1, 4]),
        T("-96", &[6, 2, 1, 4]),
        T("64", &[6, 3, 1, 4]),
        T("-16", &[6, 4, 1, 4]),
        T("4", &[7, 0, 0, 4]),
        T("-16", &[7, 1, 0, 4]),
        T("24", &[7, 2, 0, 4]),
        T("-16", &[7, 3, 0, 4]),
        T("4", &[7, 4, 0, 4]),
    ],
);

pub static A30: Expr = Expr::new(
    "a30",
    4,
    &[
        T("1", &[0, 1, 2, 0]),
        T("-2", &[0, 2, 2, 0]),
        T("-4", &[1, 1, 1, 0]),
        T("10", &[1, 2, 1, 0]),
        T("-8", &[2, 2, 0, 0]),
    ],
    &[
        T("4", &[2, 0, 3, 1]),
        T("-8", &[2, 1, 3, 1]),
        T("4", &[2, 2, 3, 1]),
        T("-8", &[3, 0, 2, 1]),
        T("16", &[3, 1, 2, 1]),
        T("-8", &[3, 2, 2, 1]),
        T("4", &[4, 0, 1, 1]),
        T("-4", &[4, 0, 3, 1]),
        T("-8", &[4, 1, 1, 1]),
        T("12", &[4, 1, 3, 1]),
        T("4", &[4, 2, 1, 1]),
        T("-12", &[4, 2, 3, 1]),
        T("4", &[4, 3, 3, 1]),
        T("8", &[5, 0, 2, 1]),
        T("-24", &[5, 1, 2, 1]),
        T("24", &[5, 2, 2, 1]),
        T("-8", &[5, 3, 2, 1]),
        T("-4", &[6, 0, 1, 1]),
        T("12", &[6, 1, 1, 1]),
        T("-12", &[6, 2, 1, 1]),
        T("4", &[6, 3, 1, 1]),
    ],
);

pub static A31: Expr = Expr::new(
    "a31",
    4,
    &[
        T("-1", &[0, 1, 3, 0]),
        T("4", &[0, 2, 3, 0]),
        T("-4", &[0, 3, 3, 0]),
        T("2", &[1, 1, 2, 0]),
        T("-12", &[1, 2, 2, 0]),
        T("16", &[1, 3, 2, 0]),
        T("8", &[2, 2, 1, 0]),
        T("-20", &[2, 3, 1, 0]),
        T("8", &[3, 3, 0, 0]),
    ],
    &[
        T("-4", &[3, 0, 4, 2]),
        T("12", &[3, 1, 4, 2]),
        T("-12", &[3, 2, 4, 2]),
        T("4", &[3, 3, 4, 2]),
        T("12", &[4, 0, 3, 2]),
        T("-36", &[4, 1, 3, 2]),
        T("36", &[4, 2, 3, 2]),
        T("-12", &[4, 3, 3, 2]),
        T("-12", &[5, 0, 2, 2]),
        T("4", &[5, 0, 4, 2]),
        T("36", &[5, 1, 2, 2]),
        T("-16", &[5, 1, 4, 2]),
        T("-36", &[5, 2, 2, 2]),
        T("24", &[5, 2, 4, 2]),
        T("12", &[5, 3, 2, 2]),
        T("-16", &[5, 3, 4, 2]),
        T("4", &[5, 4, 4, 2]),
        T("4", &[6, 0, 1, 2]),
        T("-12", &[6, 0, 3, 2]),
        T("-12", &[6, 1, 1, 2]),
        T("48", &[6, 1, 3, 2]),
        T("12", &[6, 2, 1, 2]),
        T("-72", &[6, 2, 3, 2]),
        T("-4", &[6, 3, 1, 2]),
        T("48", &[6, 3, 3, 2]),
        T("-12", &[6, 4, 3, 2]),
        T("12", &[7, 0, 2, 2]),
        T("-48", &[7, 1, 2, 2]),
        T("72", &[7, 2, 2, 2]),
        T("-48", &[7, 3, 2, 2]),
        T("12", &[7, 4, 2, 2]),
        T("-4", &[8, 0, 1, 2]),
        T("16", &[8, 1, 1, 2]),
        T("-24", &[8, 2, 1, 2]),
        T("16", &[8, 3, 1, 2]),
        T("-4", &[8, 4, 1, 2]),
    ],
);

pub static A32: Expr = Expr::new(
    "a32",
    4,
    &[
        T("1", &[0, 1, 3, 0]),
        T("-6", &[0, 2, 3, 0]),
        T("12", &[0, 3, 3, 0]),
        T("-8", &[0, 4, 3, 0]),
        T("6", &[1, 2, 2, 0]),
        T("-24", &[1, 3, 2, 0]),
        T("24", &[1, 4, 2, 0]),
        T("12", &[2, 3, 1, 0]),
        T("-24", &[2, 4, 1, 0]),
        T("8", &[3, 4, 0, 0]),
    ],
    &[
        T("2", &[3, 0, 5, 3]),
        T("-8", &[3, 1, 5, 3]),
        T("12", &[3, 2, 5, 3]),
        T("-8", &[3, 3, 5, 3]),
        T("2", &[3, 4, 5, 3]),
        T("-8", &[4, 0, 4, 3]),
        T("32", &[4, 1, 4, 3]),
        T("-48", &[4, 2, 4, 3]),
        T("32", &[4, 3, 4, 3]),
        T("-8", &[4, 4, 4, 3]),
        T("12", &[5, 0, 3, 3]),
        T("-2", &[5, 0, 5, 3]),
        T("-48", &[5, 1, 3, 3]),
        T("10", &[5, 1, 5, 3]),
        T("72", &[5, 2, 3, 3]),
        T("-20", &[5, 2, 5, 3]),
        T("-48", &[5, 3, 3, 3]),
        T("20", &[5, 3, 5, 3]),
        T("12", &[5, 4, 3, 3]),
        T("-10", &[5, 4, 5, 3]),
        T("2", &[5, 5, 5, 3]),
        T("-8", &[6, 0, 2, 3]),
        T("8", &[6, 0, 4, 3]),
        T("32", &[6, 1, 2, 3]),
        T("-40", &[6, 1, 4, 3]),
        T("-48", &[6, 2, 2, 3]),
        T("80", &[6, 2, 4, 3]),
        T("32", &[6, 3, 2, 3]),
        T("-80", &[6, 3, 4, 3]),
        T("-8", &[6, 4, 2, 3]),
        T("40", &[6, 4, 4, 3]),
        T("-8", &[6, 5, 4, 3]),
        T("2", &[7, 0, 1, 3]),
        T("-12", &[7, 0, 3, 3]),
        T("-8", &[7, 1, 1, 3]),
        T("60", &[7, 1, 3, 3]),
        T("12", &[7, 2, 1, 3]),
        T("-120", &[7, 2, 3, 3]),
        T("-8", &[7, 3, 1, 3]),
        T("120", &[7, 3, 3, 3]),
        T("2", &[7, 4, 1, 3]),
        T("-60", &[7, 4, 3, 3]),
        T("12", &[7, 5, 3, 3]),
        T("8", &[8, 0, 2, 3]),
        T("-40", &[8, 1, 2, 3]),
        T("80", &[8, 2, 2, 3]),
        T("-80", &[8, 3, 2, 3]),
        T("40", &[8, 4, 2, 3]),
        T("-8", &[8, 5, 2, 3]),
        T("-2", &[9, 0, 1, 3]),
        T("10", &[9, 1, 1, 3]),
        T("-20", &[9, 2, 1, 3]),
        T("20", &[9, 3, 1, 3]),
        T("-10", &[9, 4, 1, 3]),
        T("2", &[9, 5, 1, 3]),
    ],
);

pub static A40: Expr = Expr::new(
    "a40",
    4,
    &[
        T("1", &[0, 1, 2, 0]),
        T("-4", &[0, 2, 2, 0]),
        T("4", &[0, 3, 2, 0]),
        T("4", &[1, 2, 1, 0]),
        T("-8", &[1, 3, 1, 0]),
        T("4", &[2, 3, 0, 0]),
    ],
    &[
        T("-8", &[2, 0, 5, 1]),
        T("24", &[2, 1, 5, 1]),
        T("-24", &[2, 2, 5, 1]),
        T("8", &[2, 3, 5, 1]),
        T("24", &[3, 0, 4, 1]),
        T("-72", &[3, 1, 4, 1]),
        T("72", &[3, 2, 4, 1]),
        T("-24", &[3, 3, 4, 1]),
        T("-24", &[4, 0, 3, 1]),
        T("16", &[4, 0, 5, 1]),
        T("72", &[4, 1, 3, 1]),
        T("-64", &[4, 1, 5, 1]),
        T("-72", &[4, 2, 3, 1]),
        T("96", &[4, 2, 5, 1]),
        T("24", &[4, 3, 3, 1]),
        T("-64", &[4, 3, 5, 1]),
        T("16", &[4, 4, 5, 1]),
        T("8", &[5, 0, 2, 1]),
        T("-48", &[5, 0, 4, 1]),
        T("-24", &[5, 1, 2, 1]),
        T("192", &[5, 1, 4, 1]),
        T("24", &[5, 2, 2, 1]),
        T("-288", &[5, 2, 4, 1]),
        T("-8", &[5, 3, 2, 1]),
        T("192", &[5, 3, 4, 1]),
        T("-48", &[5, 4, 4, 1]),
        T("48", &[6, 0, 3, 1]),
        T("-8", &[6, 0, 5, 1]),
        T("-192", &[6, 1, 3, 1]),
        T("40", &[6, 1, 5, 1]),
        T("288", &[6, 2, 3, 1]),
        T("-80", &[6, 2, 5, 1]),
        T("-192", &[6, 3, 3, 1]),
        T("80", &[6, 3, 5, 1]),
        T("48", &[6, 4, 3, 1]),
        T("-40", &[6, 4, 5, 1]),
        T("8", &[6, 5, 5, 1]),
        T("-16", &[7, 0, 2, 1]),
        T("24", &[7, 0, 4, 1]),
        T("64", &[7, 1, 2, 1]),
        T("-120", &[7, 1, 4, 1]),
        T("-96", &[7, 2, 2, 1]),
        T("240", &[7, 2, 4, 1]),
        T("64", &[7, 3, 2, 1]),
        T("-240", &[7, 3, 4, 1]),
        T("-16", &[7, 4, 2, 1]),
        T("120", &[7, 4, 4, 1]),
        T("-24", &[7, 5, 4, 1]),
        T("-24", &[8, 0, 3, 1]),
        T("120", &[8, 1, 3, 1]),
        T("-240", &[8, 2, 3, 1]),
        T("240", &[8, 3, 3, 1]),
        T("-120", &[8, 4, 3, 1]),
        T("24", &[8, 5, 3, 1]),
        T("8", &[9, 0, 2, 1]),
        T("-40", &[9, 1, 2, 1]),
        T("80", &[9, 2, 2, 1]),
        T("-80", &[9, 3, 2, 1]),
        T("40", &[9, 4, 2, 1]),
        T("-8", &[9, 5, 2, 1]),
    ],
);

pub static A41: Expr = Expr::new(
    "a41",
    4,
    &[
        T("-1", &[0, 1, 3, 0]),
        T("6", &[0, 2, 3, 0]),
        T("-12", &[0, 3, 3, 0]),
        T("8", &[0, 4, 3, 0]),
        T("-6", &[1, 2, 2, 0]),
        T("24", &[1, 3, 2, 0]),
        T("-24", &[1, 4, 2, 0]),
        T("-12", &[2, 3, 1, 0]),
        T("24", &[2, 4, 1, 0]),
        T("-8", &[3, 4, 0, 0]),
    ],
    &[
        T("8", &[3, 0, 6, 2]),
        T("-32", &[3, 1, 6, 2]),
        T("48", &[3, 2, 6, 2]),
        T("-32", &[3, 3, 6, 2]),
        T("8", &[3, 4, 6, 2]),
        T("-32", &[4, 0, 5, 2]),
        T("128", &[4, 1, 5, 2]),
        T("-192", &[4, 2, 5, 2]),
        T("128", &[4, 3, 5, 2]),
        T("-32", &[4, 4, 5, 2]),
        T("48", &[5, 0, 4, 2]),
        T("-16", &[5, 0, 6, 2]),
        T("-192", &[5, 1, 4, 2]),
        T("80", &[5, 1, 6, 2]),
        T("288", &[5, 2, 4, 2]),
        T("-160", &[5, 2, 6, 2]),
        T("-192", &[5, 3, 4, 2]),
        T("160", &[5, 3, 6, 2]),
        T("48", &[5, 4, 4, 2]),
        T("-80", &[5, 4, 6, 2]),
        T("16", &[5, 5, 6, 2]),
        T("-32", &[6, 0, 3, 2]),
        T("64", &[6, 0, 5, 2]),
        T("128", &[6, 1, 3, 2]),
        T("-320", &[6, 1, 5, 2]),
        T("-192", &[6, 2, 3, 2]),
        T("640", &[6, 2, 5, 2]),
        T("128", &[6, 3, 3, 2]),
        T("-640", &[6, 3, 5, 2]),
        T("-32", &[6, 4, 3, 2]),
        T("320", &[6, 4, 5, 2]),
        T("-64", &[6, 5, 5, 2]),
        T("8", &[7, 0, 2, 2]),
        T("-96", &[7, 0, 4, 2]),
        T("8", &[7, 0, 6, 2]),
        T("-32", &[7, 1, 2, 2]),
        T("480", &[7, 1, 4, 2]),
        T("-48", &[7, 1, 6, 2]),
        T("48", &[7, 2, 2, 2]),
        T("-960", &[7, 2, 4, 2]),
        T("120", &[7, 2, 6, 2]),
        T("-32", &[7, 3, 2, 2]),
        T("960", &[7, 3, 4, 2]),
        T("-160", &[7, 3, 6, 2]),
        T("8", &[7, 4, 2, 2]),
        T("-480", &[7, 4, 4, 2]),
        T("120", &[7, 4, 6, 2]),
        T("96", &[7, 5, 4, 2]),
        T("-48", &[7, 5, 6, 2]),
        T("8", &[7, 6, 6, 2]),
        T("64", &[8, 0, 3, 2]),
        T("-32", &[8, 0, 5, 2]),
        T("-320", &[8, 1, 3, 2]),
        T("192", &[8, 1, 5, 2]),
        T("640", &[8, 2, 3, 2]),
        T("-480", &[8, 2, 5, 2]),
        T("-640", &[8, 3, 3, 2]),
        T("640", &[8, 3, 5, 2]),
        T("320", &[8, 4, 3, 2]),
        T("-480", &[8, 4, 5, 2]),
        T("-64", &[8, 5, 3, 2]),
        T("192", &[8, 5, 5, 2]),
        T("-32", &[8, 6, 5, 2]),
        T("-16", &[9, 0, 2, 2]),
        T("48", &[9, 0, 4, 2]),
        T("80", &[9, 1, 2, 2]),
        T("-288", &[9, 1, 4, 2]),
        T("-160", &[9, 2, 2, 2]),
        T("720", &[9, 2, 4, 2]),
        T("160", &[9, 3, 2, 2]),
        T("-960", &[9, 3, 4, 2]),
        T("-80", &[9, 4, 2, 2]),
        T("720", &[9, 4, 4, 2]),
        T("16", &[9, 5, 2, 2]),
        T("-288", &[9, 5, 4, 2]),
        T("48", &[9, 6, 4, 2]),
        T("-32", &[10, 0, 3, 2]),
        T("192", &[10, 1, 3, 2]),
        T("-480", &[10, 2, 3, 2]),
        T("640", &[10, 3, 3, 2]),
        T("-480", &[10, 4, 3, 2]),
        T("192", &[10, 5, 3, 2]),
        T("-32", &[10, 6, 3, 2]),
        T("8", &[11, 0, 2, 2]),
        T("-48", &[11, 1, 2, 2]),
        T("120", &[11, 2, 2, 2]),
        T("-160", &[11, 3, 2, 2]),
        T("120", &[11, 4, 2, 2]),
        T("-48", &[11, 5, 2, 2]),
        T("8", &[11, 6, 2, 2]),
    ],
);

pub static B02: Expr = Expr::new(
    "b02",
    4,
    &[
        T("3", &[0, 0, 2, 0]),
        T("-6", &[0, 1, 2, 0]),
        T("6", &[1, 1, 1, 0]),
        T("-3", &[2, 0, 2, 0]),
        T("9", &[2, 1, 2, 0]),
        T("-6", &[2, 2, 2, 0]),
        T("-6", &[3, 1, 1, 0]),
        T("6", &[3, 2, 1, 0]),
    ],
    &[
        T("-4", &[1, 0, 1, 2]),
        T("4", &[1, 1, 1, 2]),
        T("4", &[2, 0, 0, 2]),
        T("-4", &[2, 1, 0, 2]),
    ],
);

pub static B03: Expr = Expr::new(
    "b03",
    4,
    &[
        T("-2", &[0, 0, 3, 0]),
        T("8", &[0, 1, 3, 0]),
        T("-8", &[0, 2, 3, 0]),
        T("-8", &[1, 1, 2, 0]),
        T("16", &[1, 2, 2, 0]),
        T("-1", &[2, 0, 3, 0]),
        T("5", &[2, 1, 3, 0]),
        T("-8", &[2, 2, 1, 0]),
        T("-8", &[2, 2, 3, 0]),
        T("4", &[2, 3, 3, 0]),
        T("-4", &[3, 1, 2, 0]),
        T("12", &[3, 2, 2, 0]),
        T("-8", &[3, 3, 2, 0]),
        T("-4", &[4, 2, 1, 0]),
        T("4", &[4, 3, 1, 0]),
    ],
    &[
        T("4", &[2, 0, 2, 3]),
        T("-8", &[2, 1, 2, 3]),
        T("4", &[2, 2, 2, 3]),
        T("-8", &[3, 0, 1, 3]),
        T("16", &[3, 1, 1, 3]),
        T("-8", &[3, 2, 1, 3]),
        T("4", &[4, 0, 0, 3]),
        T("-8", &[4, 1, 0, 3]),
        T("4", &[4, 2, 0, 3]),
    ],
);

pub static B04: Expr = Expr::new(
    "b04",
    4,
    &[
        T("-1", &[0, 0, 4, 0]),
        T("6", &[0, 1, 4, 0]),
        T("-12", &[0, 2, 4, 0]),
        T("8", &[0, 3, 4, 0]),
        T("-6", &[1, 1, 3, 0]),
        T("24", &[1, 2, 3, 0]),
        T("-24", &[1, 3, 3, 0]),
        T("-12", &[2, 2, 2, 0]),
        T("24", &[2, 3, 2, 0]),
        T("-8", &[3, 3, 1, 0]),
    ],
    &[
        T("-4", &[3, 0, 3, 4]),
        T("12", &[3, 1, 3, 4]),
        T("-12", &[3, 2, 3, 4]),
        T("4", &[3, 3, 3, 4]),
        T("12", &[4, 0, 2, 4]),
        T("-36", &[4, 1, 2, 4]),
        T("36", &[4, 2, 2, 4]),
        T("-12", &[4, 3, 2, 4]),
        T("-12", &[5, 0, 1, 4]),
        T("36", &[5, 1, 1, 4]),
        T("-36", &[5, 2, 1, 4]),
        T("12", &[5, 3, 1, 4]),
        T("4", &[6, 0, 0, 4]),
        T("-12", &[6, 1, 0, 4]),
        T("12", &[6, 2, 0, 4]),
        T("-4", &[6, 3, 0, 4]),
    ],
);

pub static B11: Expr = Expr::new(
    "b11",
    4,
    &[
        T("-3", &[0, 0, 1, 0]),
        T("6", &[0, 1, 1, 0]),
        T("-6", &[1, 1, 0, 0]),
        T("1", &[2, 0, 1, 0]),
        T("-3", &[2, 1, 1, 0]),
        T("2", &[2, 2, 1, 0]),
        T("2", &[3, 1, 0, 0]),
        T("-2", &[3, 2, 0, 0]),
    ],
    &[
        T("-2", &[1, 0, 1, 1]),
        T("2", &[1, 1, 1, 1]),
        T("2", &[2, 0, 0, 1]),
        T("-2", &[2, 1, 0, 1]),
        T("2", &[3, 0, 1, 1]),
        T("-4", &[3, 1, 1, 1]),
        T("2", &[3, 2, 1, 1]),
        T("-2", &[4, 0, 0, 1]),
        T("4", &[4, 1, 0, 1]),
        T("-2", &[4, 2, 0, 1]),
    ],
);

pub static B12: Expr = Expr::new(
    "b12",
    4,
    &[
        T("-1", &[0, 0, 2, 0]),
        T("4", &[0, 1, 2, 0]),
        T("-4", &[0, 2, 2, 0]),
        T("-4", &[1, 1, 1, 0]),
        T("8", &[1, 2, 1, 0]),
        T("-4", &[2, 2, 0, 0]),
    ],
    &[
        T("-2", &[0, 0, 2, 2]),
        T("2", &[0, 1, 2, 2]),
        T("4", &[1, 0, 1, 2]),
        T("-4", &[1, 1, 1, 2]),
        T("-2", &[2, 0, 0, 2]),
        T("2", &[2, 0, 2, 2]),
        T("2", &[2, 1, 0, 2]),
        T("-4", &[2, 1, 2, 2]),
        T("2", &[2, 2, 2, 2]),
        T("-4", &[3, 0, 1, 2]),
        T("8", &[3, 1, 1, 2]),
        T("-4", &[3, 2, 1, 2]),
        T("2", &[4, 0, 0, 2]),
        T("-4", &[4, 1, 0, 2]),
        T("2", &[4, 2, 0, 2]),
    ],
);

pub static B13: Expr = Expr::new(
    "b13",
    4,
    &[
        T("1", &[0, 0, 3, 0]),
        T("-6", &[0, 1, 3, 0]),
        T("12", &[0, 2, 3, 0]),
        T("-8", &[0, 3, 3, 0]),
        T("6", &[1, 1, 2, 0]),
        T("-24", &[1, 2, 2, 0]),
        T("24", &[1, 3, 2, 0]),
        T("12", &[2, 2, 1, 0]),
        T("-24", &[2, 3, 1, 0]),
        T("8", &[3, 3, 0, 0]),
    ],
    &[
        T("-2", &[3, 0, 3, 3]),
        T("6", &[3, 1, 3, 3]),
        T("-6", &[3, 2, 3, 3]),
        T("2", &[3, 3, 3, 3]),
        T("6", &[4, 0, 2, 3]),
        T("-18", &[4, 1, 2, 3]),
        T("18", &[4, 2, 2, 3]),
        T("-6", &[4, 3, 2, 3]),
        T("-6", &[5, 0, 1, 3]),
        T("2", &[5, 0, 3, 3]),
        T("18", &[5, 1, 1, 3]),
        T("-8", &[5, 1, 3, 3]),
        T("-18", &[5, 2, 1, 3]),
        T("12", &[5, 2, 3, 3]),
        T("6", &[5, 3, 1, 3]),
        T("-8", &[5, 3, 3, 3]),
        T("2", &[5, 4, 3, 3]),
        T("2", &[6, 0, 0, 3]),
        T("-6", &[6, 0, 2, 3]),
        T("-6", &[6, 1, 0, 3]),
        T("24", &[6, 1, 2, 3]),
        T("6", &[6, 2, 0, 3]),
        T("-36", &[6, 2, 2, 3]),
        T("-2", &[6, 3, 0, 3]),
        T("24", &[6, 3, 2, 3]),
        T("-6", &[6, 4, 2, 3]),
        T("6", &[7, 0, 1, 3]),
        T("-24", &[7, 1, 1, 3]),
        T("36", &[7, 2, 1, 3]),
        T("-24", &[7, 3, 1, 3]),
        T("6", &[7, 4, 1, 3]),
        T("-2", &[8, 0, 0, 3]),
        T("8", &[8, 1, 0, 3]),
        T("-12", &[8, 2, 0, 3]),
        T("8", &[8, 3, 0, 3]),
        T("-2", &[8, 4, 0, 3]),
    ],
);

pub static B20: Expr = Expr::new(
    "b20",
    4,
    &[
        T("-1", &[0, 0, 1, 0]),
        T("2", &[0, 1, 1, 0]),
        T("-2", &[1, 1, 0, 0]),
    ],
    &[
        T("-4", &[1, 0, 2, 0]),
        T("4", &[1, 1, 2, 0]),
        T("4", &[2, 0, 1, 0]),
        T("-4", &[2, 1, 1, 0]),
        T("4", &[3, 0, 2, 0]),
        T("-8", &[3, 1, 2, 0]),
        T("4", &[3, 2, 2, 0]),
        T("-4", &[4, 0, 1, 0]),
        T("8", &[4, 1, 1, 0]),
        T("-4", &[4, 2, 1, 0]),
    ],
);

pub static B21: Expr = Expr::new(
    "b21",
    4,
    &[
        T("2", &[0, 0, 2, 0]),
        T("-8", &[0, 1, 2, 0]),
        T("8", &[0, 2, 2, 0]),
        T("8", &[1, 1, 1, 0]),
        T("-16", &[1, 2, 1, 0]),
        T("-1", &[2, 0, 2, 0]),
        T("5", &[2, 1, 2, 0]),
        T("8", &[2, 2, 0, 0]),
        T("-8", &[2, 2, 2, 0]),
        T("4", &[2, 3, 2, 0]),
        T("-4", &[3, 1, 1, 0]),
        T("12", &[3, 2, 1, 0]),
        T("-8", &[3, 3, 1, 0]),
        T("-4", &[4, 2, 0, 0]),
        T("4", &[4, 3, 0, 0]),
    ],
    &[
        T("4", &[2, 0, 3, 1]),
        T("-8", &[2, 1, 3, 1]),
        T("4", &[2, 2, 3, 1]),
        T("-8", &[3, 0, 2, 1]),
        T("16", &[3, 1, 2, 1]),
        T("-8", &[3, 2, 2, 1]),
        T("4", &[4, 0, 1, 1]),
        T("-8", &[4, 0, 3, 1]),
        T("-8", &[4, 1, 1, 1]),
        T("24", &[4, 1, 3, 1]),
        T("4", &[4, 2, 1, 1]),
        T("-24", &[4, 2, 3, 1]),
        T("8", &[4, 3, 3, 1]),
        T("16", &[5, 0, 2, 1]),
        T("-48", &[5, 1, 2, 1]),
        T("48", &[5, 2, 2, 1]),
        T("-16", &[5, 3, 2, 1]),
        T("-8", &[6, 0, 1, 1]),
        T("4", &[6, 0, 3, 1]),
        T("24", &[6, 1, 1, 1]),
        T("-16", &[6, 1, 3, 1]),
        T("-24", &[6, 2, 1, 1]),
        T("24", &[6, 2, 3, 1]),
        T("8", &[6, 3, 1, 1]),
        T("-16", &[6, 3, 3, 1]),
        T("4", &[6, 4, 3, 1]),
        T("-8", &[7, 0, 2, 1]),
        T("32", &[7, 1, 2, 1]),
        T("-48", &[7, 2, 2, 1]),
        T("32", &[7, 3, 2, 1]),
        T("-8", &[7, 4, 2, 1]),
        T("4", &[8, 0, 1, 1]),
        T("-16", &[8, 1, 1, 1]),
        T("24", &[8, 2, 1, 1]),
        T("-16", &[8, 3, 1, 1]),
        T("4", &[8, 4, 1, 1]),
    ],
);

pub static B22: Expr = Expr::new(
    "b22",
    4,
    &[
        T("-1", &[0, 0, 3, 0]),
        T("6", &[0, 1, 3, 0]),
        T("-12", &[0, 2, 3, 0]),
        T("8", &[0, 3, 3, 0]),
        T("-6", &[1, 1, 2, 0]),
        T("24", &[1, 2, 2, 0]),
        T("-24", &[1, 3, 2, 0]),
        T("-12", &[2, 2, 1, 0]),
        T("24", &[2, 3, 1, 0]),
        T("-8", &[3, 3, 0, 0]),
    ],
    &[
        T("-4", &[3, 0, 4, 2]),
        T("12", &[3, 1, 4, 2]),
        T("-12", &[3, 2, 4, 2]),
        T("4", &[3, 3, 4, 2]),
        T("12", &[4, 0, 3, 2]),
        T("-36", &[4, 1, 3, 2]),
        T("36", &[4, 2, 3, 2]),
        T("-12", &[4, 3, 3, 2]),
        T("-12", &[5, 0, 2, 2]),
        T("8", &[5, 0, 4, 2]),
        T("36", &[5, 1, 2, 2]),
        T("-32", &[5, 1, 4, 2]),
        T("-36", &[5, 2, 2, 2]),
        T("48", &[5, 2, 4, 2]),
        T("12", &[5, 3, 2, 2]),
        T("-32", &[5, 3, 4, 2]),
        T("8", &[5, 4, 4, 2]),
        T("4", &[6, 0, 1, 2]),
        T("-24", &[6, 0, 3, 2]),
        T("-12", &[6, 1, 1, 2]),
        T("96", &[6, 1, 3, 2]),
        T("12", &[6, 2, 1, 2]),
        T("-144", &[6, 2, 3, 2]),
        T("-4", &[6, 3, 1, 2]),
        T("96", &[6, 3, 3, 2]),
        T("-24", &[6, 4, 3, 2]),
        T("24", &[7, 0, 2, 2]),
        T("-4", &[7, 0, 4, 2]),
        T("-96", &[7, 1, 2, 2]),
        T("20", &[7, 1, 4, 2]),
        T("144", &[7, 2, 2, 2]),
        T("-40", &[7, 2, 4, 2]),
        T("-96", &[7, 3, 2, 2]),
        T("40", &[7, 3, 4, 2]),
        T("24", &[7, 4, 2, 2]),
        T("-20", &[7, 4, 4, 2]),
        T("4", &[7, 5, 4, 2]),
        T("-8", &[8, 0, 1, 2]),
        T("12", &[8, 0, 3, 2]),
        T("32", &[8, 1, 1, 2]),
        T("-60", &[8, 1, 3, 2]),
        T("-48", &[8, 2, 1, 2]),
        T("120", &[8, 2, 3, 2]),
        T("32", &[8, 3, 1, 2]),
        T("-120", &[8, 3, 3, 2]),
        T("-8", &[8, 4, 1, 2]),
        T("60", &[8, 4, 3, 2]),
        T("-12", &[8, 5, 3, 2]),
        T("-12", &[9, 0, 2, 2]),
        T("60", &[9, 1, 2, 2]),
        T("-120", &[9, 2, 2, 2]),
        T("120", &[9, 3, 2, 2]),
        T("-60", &[9, 4, 2, 2]),
        T("12", &[9, 5, 2, 2]),
        T("4", &[10, 0, 1, 2]),
        T("-20", &[10, 1, 1, 2]),
        T("40", &[10, 2, 1, 2]),
        T("-40", &[10, 3, 1, 2]),
        T("20", &[10, 4, 1, 2]),
        T("-4", &[10, 5, 1, 2]),
    ],
);

pub static C00: Expr = Expr::new(
    "c00",
    4,
    &[
        T("-1", &[4, 0, 1, 0]),
        T("2", &[4, 1, 1, 0]),
        T("-1", &[4, 2, 1, 0]),
        T("2", &[6, 0, 1, 0]),
        T("-6", &[6, 1, 1, 0]),
        T("6", &[6, 2, 1, 0]),
        T("-2", &[6, 3, 1, 0]),
        T("-1", &[8, 0, 1, 0]),
        T("4", &[8, 1, 1, 0]),
        T("-6", &[8, 2, 1, 0]),
        T("4", &[8, 3, 1, 0]),
        T("-1", &[8, 4, 1, 0]),
    ],
    &[
        T("-8", &[0, 0, 0, 0]),
        T("4", &[0, 1, 0, 0]),
        T("4", &[2, 0, 0, 0]),
        T("-8", &[2, 1, 0, 0]),
        T("4", &[2, 2, 0, 0]),
    ],
);

pub static C01: Expr = Expr::new(
    "c01",
    4,
    &[
        T("-4", &[0, 0, 0, 0]),
        T("2", &[0, 1, 0, 0]),
        T("2", &[2, 0, 0, 0]),
        T("-4", &[2, 1, 0, 0]),
        T("2", &[2, 2, 0, 0]),
        T("-1", &[3, 0, 1, 0]),
        T("2", &[3, 1, 1, 0]),
        T("-1", &[3, 2, 1, 0]),
        T("2", &[5, 0, 1, 0]),
        T("-6", &[5, 1, 1, 0]),
        T("6", &[5, 2, 1, 0]),
        T("-2", &[5, 3, 1, 0]),
        T("-1", &[7, 0, 1, 0]),
        T("4", &[7, 1, 1, 0]),
        T("-6", &[7, 2, 1, 0]),
        T("4", &[7, 3, 1, 0]),
        T("-1", &[7, 4, 1, 0]),
    ],
    &[
        T("-4", &[0, 0, 0, 0]),
        T("2", &[0, 1, 0, 0]),
        T("2", &[2, 0, 0, 0]),
        T("-4", &[2, 1, 0, 0]),
        T("2", &[2, 2, 0, 0]),
    ],
);

pub static C02: Expr = Expr::new(
    "c02",
    4,
    &[
        T("-4", &[0, 0, 0, 0]),
        T("2", &[0, 1, 0, 0]),
        T("2", &[2, 0, 0, 0]),
        T("-4", &[2, 1, 0, 0]),
        T("2", &[2, 2, 0, 0]),
        T("-1", &[3, 0, 1, 0]),
        T("2", &[3, 1, 1, 0]),
        T("-1", &[3, 2, 1, 0]),
        T("2", &[5, 0, 1, 0]),
        T("-6", &[5, 1, 1, 0]),
        T("6", &[5, 2, 1, 0]),
        T("-2", &[5, 3, 1, 0]),
        T("-1", &[7, 0, 1, 0]),
        T("4", &[7, 1, 1, 0]),
        T("-6", &[7, 2, 1, 0]),
        T("4", &[7, 3, 1, 0]),
        T("-1", &[7, 4, 1, 0]),
    ],
    &[
        T("-8", &[1, 0, 0, 0]),
        T("4", &[1, 1, 0, 0]),
        T("4", &[3, 0, 0, 0]),
        T("-8", &[3, 1, 0, 0]),
        T("4", &[3, 2, 0, 0]),
    ],
);

pub static C10: Expr = Expr::new(
    "c10",
    4,
    &[
        T("1", &[3, 0, 1, 0]),
        T("-1", &[3, 1, 1, 0]),
        T("1", &[5, 0, 1, 0]),
        T("-2", &[5, 1, 1, 0]),
        T("1", &[5, 2, 1, 0]),
    ],
    &[T("2", &[0, 0, 0, 0])],
);

pub static C11: Expr = Expr::new(
    "c11",
    4,
    &[
        T("-12", &[0, 0, 0, 0]),
        T("6", &[0, 1, 0, 0]),
        T("10", &[2, 0, 0, 0]),
        T("-18", &[2, 1, 0, 0]),
        T("8", &[2, 2, 0, 0]),
        T("-3", &[3, 0, 1, 0]),
        T("6", &[3, 1, 1, 0]),
        T("-3", &[3, 2, 1, 0]),
        T("-2", &[4, 0, 0, 0]),
        T("6", &[4, 1, 0, 0]),
        T("-6", &[4, 2, 0, 0]),
        T("2", &[4, 3, 0, 0]),
        T("5", &[5, 0, 1, 0]),
        T("-15", &[5, 1, 1, 0]),
        T("15", &[5, 2, 1, 0]),
        T("-5", &[5, 3, 1, 0]),
        T("-1", &[7, 0, 1, 0]),
        T("4", &[7, 1, 1, 0]),
        T("-6", &[7, 2, 1, 0]),
        T("4", &[7, 3, 1, 0]),
        T("-1", &[7, 4, 1, 0]),
        T("-1", &[9, 0, 1, 0]),
        T("5", &[9, 1, 1, 0]),
        T("-10", &[9, 2, 1, 0]),
        T("10", &[9, 3, 1, 0]),
        T("-5", &[9, 4, 1, 0]),
        T("1", &[9, 5, 1, 0]),
    ],
    &[
        T("-2", &[1, 0, 0, 0]),
        T("2", &[1, 1, 0, 0]),
        T("4", &[3, 0, 0, 0]),
        T("-8", &[3, 1, 0, 0]),
        T("4", &[3, 2, 0, 0]),
        T("-2", &[5, 0, 0, 0]),
        T("6", &[5, 1, 0, 0]),
        T("-6", &[5, 2, 0, 0]),
        T("2", &[5, 3, 0, 0]),
    ],
);

pub static C20: Expr = Expr::new(
    "c20",
    4,
    &[
        T("-24", &[0, 0, 0, 0]),
        T("24", &[0, 1, 0, 0]),
        T("-6", &[0, 2, 0, 0]),
        T("24", &[2, 0, 0, 0]),
        T("-60", &[2, 1, 0, 0]),
        T("48", &[2, 2, 0, 0]),
        T("-12", &[2, 3, 0, 0]),
        T("-6", &[3, 0, 1, 0]),
        T("15", &[3, 1, 1, 0]),
        T("-12", &[3, 2, 1, 0]),
        T("3", &[3, 3, 1, 0]),
        T("-6", &[4, 0, 0, 0]),
        T("24", &[4, 1, 0, 0]),
        T("-36", &[4, 2, 0, 0]),
        T("24", &[4, 3, 0, 0]),
        T("-6", &[4, 4, 0, 0]),
        T("15", &[5, 0, 1, 0]),
        T("-54", &[5, 1, 1, 0]),
        T("72", &[5, 2, 1, 0]),
        T("-42", &[5, 3, 1, 0]),
        T("9", &[5, 4, 1, 0]),
        T("-4", &[7, 0, 1, 0]),
        T("21", &[7, 1, 1, 0]),
        T("-44", &[7, 2, 1, 0]),
        T("46", &[7, 3, 1, 0]),
        T("-24", &[7, 4, 1, 0]),
        T("5", &[7, 5, 1, 0]),
        T("-1", &[9, 0, 1, 0]),
        T("6", &[9, 1, 1, 0]),
        T("-15", &[9, 2, 1, 0]),
        T("20", &[9, 3, 1, 0]),
        T("-15", &[9, 4, 1, 0]),
        T("6", &[9, 5, 1, 0]),
        T("-1", &[9, 6, 1, 0]),
    ],
    &[
        T("4", &[1, 0, 0, 0]),
        T("-8", &[1, 1, 0, 0]),
        T("4", &[1, 2, 0, 0]),
        T("-8", &[3, 0, 0, 0]),
        T("24", &[3, 1, 0, 0]),
        T("-24", &[3, 2, 0, 0]),
        T("8", &[3, 3, 0, 0]),
        T("4", &[5, 0, 0, 0]),
        T("-16", &[5, 1, 0, 0]),
        T("24", &[5, 2, 0, 0]),
        T("-16", &[5, 3, 0, 0]),
        T("4", &[5, 4, 0, 0]),
    ],
);

pub static D00: Expr = Expr::new(
    "d00",
    4,
    &[
        T("-8", &[1, 0, 0, 1]),
        T("8", &[1, 1, 0, 1]),
        T("-2", &[1, 2, 0, 1]),
        T("8", &[3, 0, 0, 1]),
        T("-20", &[3, 1, 0, 1]),
        T("16", &[3, 2, 0, 1]),
        T("-4", &[3, 3, 0, 1]),
        T("-2", &[4, 0, 1, 0]),
        T("6", &[4, 1, 1, 0]),
        T("-2", &[4, 1, 1, 1]),
        T("-6", &[4, 2, 1, 0]),
        T("5", &[4, 2, 1, 1]),
        T("2", &[4, 3, 1, 0]),
        T("-4", &[4, 3, 1, 1]),
        T("1", &[4, 4, 1, 1]),
        T("-2", &[5, 0, 0, 1]),
        T("8", &[5, 1, 0, 1]),
        T("-12", &[5, 2, 0, 1]),
        T("8", &[5, 3, 0, 1]),
        T("-2", &[5, 4, 0, 1]),
        T("5", &[6, 0, 1, 0]),
        T("-20", &[6, 1, 1, 0]),
        T("5", &[6, 1, 1, 1]),
        T("30", &[6, 2, 1, 0]),
        T("-18", &[6, 2, 1, 1]),
        T("-20", &[6, 3, 1, 0]),
        T("24", &[6, 3, 1, 1]),
        T("5", &[6, 4, 1, 0]),
        T("-14", &[6, 4, 1, 1]),
        T("3", &[6, 5, 1, 1]),
        T("-4", &[8, 0, 1, 0]),
        T("20", &[8, 1, 1, 0]),
        T("-4", &[8, 1, 1, 1]),
        T("-40", &[8, 2, 1, 0]),
        T("19", &[8, 2, 1, 1]),
        T("40", &[8, 3, 1, 0]),
        T("-36", &[8, 3, 1, 1]),
        T("-20", &[8, 4, 1, 0]),
        T("34", &[8, 4, 1, 1]),
        T("4", &[8, 5, 1, 0]),
        T("-16", &[8, 5, 1, 1]),
        T("3", &[8, 6, 1, 1]),
        T("1", &[10, 0, 1, 0]),
        T("-6", &[10, 1, 1, 0]),
        T("1", &[10, 1, 1, 1]),
        T("15", &[10, 2, 1, 0]),
        T("-6", &[10, 2, 1, 1]),
        T("-20", &[10, 3, 1, 0]),
        T("15", &[10, 3, 1, 1]),
        T("15", &[10, 4, 1, 0]),
        T("-20", &[10, 4, 1, 1]),
        T("-6", &[10, 5, 1, 0]),
        T("15", &[10, 5, 1, 1]),
        T("1", &[10, 6, 1, 0]),
        T("-6", &[10, 6, 1, 1]),
        T("1", &[10, 7, 1, 1]),
    ],
    &[
        T("-16", &[0, 0, 0, 0]),
        T("40", &[0, 1, 0, 0]),
        T("-32", &[0, 2, 0, 0]),
        T("8", &[0, 3, 0, 0]),
        T("32", &[2, 0, 0, 0]),
        T("-116", &[2, 1, 0, 0]),
        T("156", &[2, 2, 0, 0]),
        T("-92", &[2, 3, 0, 0]),
        T("20", &[2, 4, 0, 0]),
        T("-20", &[4, 0, 0, 0]),
        T("96", &[4, 1, 0, 0]),
        T("-184", &[4, 2, 0, 0]),
        T("176", &[4, 3, 0, 0]),
        T("-84", &[4, 4, 0, 0]),
        T("16", &[4, 5, 0, 0]),
        T("4", &[6, 0, 0, 0]),
        T("-24", &[6, 1, 0, 0]),
        T("60", &[6, 2, 0, 0]),
        T("-80", &[6, 3, 0, 0]),
        T("60", &[6, 4, 0, 0]),
        T("-24", &[6, 5, 0, 0]),
        T("4", &[6, 6, 0, 0]),
    ],
);

pub static D01: Expr = Expr::new(
    "d01",
    4,
    &[
        T("-8", &[0, 0, 0, 1]),
        T("8", &[0, 1, 0, 1]),
        T("-2", &[0, 2, 0, 1]),
        T("8", &[2, 0, 0, 1]),
        T("-28", &[2, 1, 0, 1]),
        T("24", &[2, 2, 0, 1]),
        T("-6", &[2, 3, 0, 1]),
        T("2", &[3, 0, 1, 0]),
        T("-6", &[3, 1, 1, 0]),
        T("6", &[3, 2, 1, 0]),
        T("-2", &[3, 3, 1, 0]),
        T("-2", &[4, 0, 0, 1]),
        T("16", &[4, 1, 0, 1]),
        T("-32", &[4, 2, 0, 1]),
        T("24", &[4, 3, 0, 1]),
        T("-6", &[4, 4, 0, 1]),
        T("-7", &[5, 0, 1, 0]),
        T("28", &[5, 1, 1, 0]),
        T("-2", &[5, 1, 1, 1]),
        T("-42", &[5, 2, 1, 0]),
        T("5", &[5, 2, 1, 1]),
        T("28", &[5, 3, 1, 0]),
        T("-4", &[5, 3, 1, 1]),
        T("-7", &[5, 4, 1, 0]),
        T("1", &[5, 4, 1, 1]),
        T("-2", &[6, 1, 0, 1]),
        T("8", &[6, 2, 0, 1]),
        T("-12", &[6, 3, 0, 1]),
        T("8", &[6, 4, 0, 1]),
        T("-2", &[6, 5, 0, 1]),
        T("9", &[7, 0, 1, 0]),
        T("-45", &[7, 1, 1, 0]),
        T("5", &[7, 1, 1, 1]),
        T("90", &[7, 2, 1, 0]),
        T("-18", &[7, 2, 1, 1]),
        T("-90", &[7, 3, 1, 0]),
        T("24", &[7, 3, 1, 1]),
        T("45", &[7, 4, 1, 0]),
        T("-14", &[7, 4, 1, 1]),
        T("-9", &[7, 5, 1, 0]),
        T("3", &[7, 5, 1, 1]),
        T("-5", &[9, 0, 1, 0]),
        T("30", &[9, 1, 1, 0]),
        T("-4", &[9, 1, 1, 1]),
        T("-75", &[9, 2, 1, 0]),
        T("19", &[9, 2, 1, 1]),
        T("100", &[9, 3, 1, 0]),
        T("-36", &[9, 3, 1, 1]),
        T("-75", &[9, 4, 1, 0]),
        T("34", &[9, 4, 1, 1]),
        T("30", &[9, 5, 1, 0]),
        T("-16", &[9, 5, 1, 1]),
        T("-5", &[9, 6, 1, 0]),
        T("3", &[9, 6, 1, 1]),
        T("1", &[11, 0, 1, 0]),
        T("-7", &[11, 1, 1, 0]),
        T("1", &[11, 1, 1, 1]),
        T("21", &[11, 2, 1, 0]),
        T("-6", &[11, 2, 1, 1]),
        T("-35", &[11, 3, 1, 0]),
        T("15", &[11, 3, 1, 1]),
        T("35", &[11, 4, 1, 0]),
        T("-20", &[11, 4, 1, 1]),
        T("-21", &[11, 5, 1, 0]),
        T("15", &[11, 5, 1, 1]),
        T("7", &[11, 6, 1, 0]),
        T("-6", &[11, 6, 1, 1]),
        T("-1", &[11, 7, 1, 0]),
        T("1", &[11, 7, 1, 1]),
    ],
    &[
        T("8", &[0, 0, 0, 0]),
        T("-12", &[0, 1, 0, 0]),
        T("4", &[0, 2, 0, 0]),
        T("-24", &[2, 0, 0, 0]),
        T("62", &[2, 1, 0, 0]),
        T("-52", &[2, 2, 0, 0]),
        T("14", &[2, 3, 0, 0]),
        T("26", &[4, 0, 0, 0]),
        T("-96", &[4, 1, 0, 0]),
        T("132", &[4, 2, 0, 0]),
        T("-80", &[4, 3, 0, 0]),
        T("18", &[4, 4, 0, 0]),
        T("-12", &[6, 0, 0, 0]),
        T("58", &[6, 1, 0, 0]),
        T("-112", &[6, 2, 0, 0]),
        T("108", &[6, 3, 0, 0]),
        T("-52", &[6, 4, 0, 0]),
        T("10", &[6, 5, 0, 0]),
        T("2", &[8, 0, 0, 0]),
        T("-12", &[8, 1, 0, 0]),
        T("30", &[8, 2, 0, 0]),
        T("-40", &[8, 3, 0, 0]),
        T("30", &[8, 4, 0, 0]),
        T("-12", &[8, 5, 0, 0]),
        T("2", &[8, 6, 0, 0]),
    ],
);

pub static D02: Expr = Expr::new(
    "d02",
    4,
    &[
        T("16", &[0, 0, 0, 0]),
        T("24", &[0, 0, 0, 1]),
        T("8", &[0, 1, 0, 0]),
        T("-40", &[0, 2, 0, 0]),
        T("-18", &[0, 2, 0, 1]),
        T("16", &[0, 3, 0, 0]),
        T("6", &[0, 3, 0, 1]),
        T("-40", &[2, 0, 0, 0]),
        T("-32", &[2, 0, 0, 1]),
        T("40", &[2, 1, 0, 0]),
        T("60", &[2, 1, 0, 1]),
        T("80", &[2, 2, 0, 0]),
        T("-14", &[2, 2, 0, 1]),
        T("-120", &[2, 3, 0, 0]),
        T("-24", &[2, 3, 0, 1]),
        T("40", &[2, 4, 0, 0]),
        T("10", &[2, 4, 0, 1]),
        T("-2", &[3, 0, 1, 0]),
        T("20", &[3, 1, 1, 0]),
        T("12", &[3, 1, 1, 1]),
        T("-48", &[3, 2, 1, 0]),
        T("-30", &[3, 2, 1, 1]),
        T("44", &[3, 3, 1, 0]),
        T("24", &[3, 3, 1, 1]),
        T("-14", &[3, 4, 1, 0]),
        T("-6", &[3, 4, 1, 1]),
        T("36", &[4, 0, 0, 0]),
        T("14", &[4, 0, 0, 1]),
        T("-94", &[4, 1, 0, 0]),
        T("-54", &[4, 1, 0, 1]),
        T("34", &[4, 2, 0, 0]),
        T("76", &[4, 2, 0, 1]),
        T("102", &[4, 3, 0, 0]),
        T("-44", &[4, 3, 0, 1]),
        T("-110", &[4, 4, 0, 0]),
        T("6", &[4, 4, 0, 1]),
        T("32", &[4, 5, 0, 0]),
        T("2", &[4, 5, 0, 1]),
        T("7", &[5, 0, 1, 0]),
        T("-79", &[5, 1, 1, 0]),
        T("-30", &[5, 1, 1, 1]),
        T("246", &[5, 2, 1, 0]),
        T("108", &[5, 2, 1, 1]),
        T("-334", &[5, 3, 1, 0]),
        T("-144", &[5, 3, 1, 1]),
        T("211", &[5, 4, 1, 0]),
        T("84", &[5, 4, 1, 1]),
        T("-51", &[5, 5, 1, 0]),
        T("-18", &[5, 5, 1, 1]),
        T("-14", &[6, 0, 0, 0]),
        T("-2", &[6, 0, 0, 1]),
        T("60", &[6, 1, 0, 0]),
        T("12", &[6, 1, 0, 1]),
        T("-92", &[6, 2, 0, 0]),
        T("-30", &[6, 2, 0, 1]),
        T("48", &[6, 3, 0, 0]),
        T("40", &[6, 3, 0, 1]),
        T("18", &[6, 4, 0, 0]),
        T("-30", &[6, 4, 0, 1]),
        T("-28", &[6, 5, 0, 0]),
        T("12", &[6, 5, 0, 1]),
        T("8", &[6, 6, 0, 0]),
        T("-2", &[6, 6, 0, 1]),
        T("-9", &[7, 0, 1, 0]),
        T("115", &[7, 1, 1, 0]),
        T("24", &[7, 1, 1, 1]),
        T("-440", &[7, 2, 1, 0]),
        T("-114", &[7, 2, 1, 1]),
        T("790", &[7, 3, 1, 0]),
        T("216", &[7, 3, 1, 1]),
        T("-745", &[7, 4, 1, 0]),
        T("-204", &[7, 4, 1, 1]),
        T("359", &[7, 5, 1, 0]),
        T("96", &[7, 5, 1, 1]),
        T("-70", &[7, 6, 1, 0]),
        T("-18", &[7, 6, 1, 1]),
        T("2", &[8, 0, 0, 0]),
        T("-12", &[8, 1, 0, 0]),
        T("30", &[8, 2, 0, 0]),
        T("-40", &[8, 3, 0, 0]),
        T("30", &[8, 4, 0, 0]),
        T("-12", &[8, 5, 0, 0]),
        T("2", &[8, 6, 0, 0]),
        T("5", &[9, 0, 1, 0]),
        T("-74", &[9, 1, 1, 0]),
        T("-6", &[9, 1, 1, 1]),
        T("339", &[9, 2, 1, 0]),
        T("36", &[9, 2, 1, 1]),
        T("-760", &[9, 3, 1, 0]),
        T("-90", &[9, 3, 1, 1]),
        T("955", &[9, 4, 1, 0]),
        T("120", &[9, 4, 1, 1]),
        T("-690", &[9, 5, 1, 0]),
        T("-90", &[9, 5, 1, 1]),
        T("269", &[9, 6, 1, 0]),
        T("36", &[9, 6, 1, 1]),
        T("-44", &[9, 7, 1, 0]),
        T("-6", &[9, 7, 1, 1]),
        T("-1", &[11, 0, 1, 0]),
        T("19", &[11, 1, 1, 0]),
        T("-105", &[11, 2, 1, 0]),
        T("287", &[11, 3, 1, 0]),
        T("-455", &[11, 4, 1, 0]),
        T("441", &[11, 5, 1, 0]),
        T("-259", &[11, 6, 1, 0]),
        T("85", &[11, 7, 1, 0]),
        T("-12", &[11, 8, 1, 0]),
        T("-1", &[13, 1, 1, 0]),
        T("8", &[13, 2, 1, 0]),
        T("-28", &[13, 3, 1, 0]),
        T("56", &[13, 4, 1, 0]),
        T("-70", &[13, 5, 1, 0]),
        T("56", &[13, 6, 1, 0]),
        T("-28", &[13, 7, 1, 0]),
        T("8", &[13, 8, 1, 0]),
        T("-1", &[13, 9, 1, 0]),
    ],
    &[
        T("-16", &[1, 0, 0, 0]),
        T("40", &[1, 1, 0, 0]),
        T("-32", &[1, 2, 0, 0]),
        T("8", &[1, 3, 0, 0]),
        T("48", &[3, 0, 0, 0]),
        T("-172", &[3, 1, 0, 0]),
        T("228", &[3, 2, 0, 0]),
        T("-132", &[3, 3, 0, 0]),
        T("28", &[3, 4, 0, 0]),
        T("-52", &[5, 0, 0, 0]),
        T("244", &[5, 1, 0, 0]),
        T("-456", &[5, 2, 0, 0]),
        T("424", &[5, 3, 0, 0]),
        T("-196", &[5, 4, 0, 0]),
        T("36", &[5, 5, 0, 0]),
        T("24", &[7, 0, 0, 0]),
        T("-140", &[7, 1, 0, 0]),
        T("340", &[7, 2, 0, 0]),
        T("-440", &[7, 3, 0, 0]),
        T("320", &[7, 4, 0, 0]),
        T("-124", &[7, 5, 0, 0]),
        T("20", &[7, 6, 0, 0]),
        T("-4", &[9, 0, 0, 0]),
        T("28", &[9, 1, 0, 0]),
        T("-84", &[9, 2, 0, 0]),
        T("140", &[9, 3, 0, 0]),
        T("-140", &[9, 4, 0, 0]),
        T("84", &[9, 5, 0, 0]),
        T("-28", &[9, 6, 0, 0]),
        T("4", &[9, 7, 0, 0]),
    ],
);

pub static D10: Expr = Expr::new(
    "d10",
    4,
    &[
        T("-8", &[0, 0, 0, 1]),
        T("8", &[0, 1, 0, 1]),
        T("-2", &[0, 2, 0, 1]),
        T("8", &[2, 0, 0, 1]),
        T("-20", &[2, 1, 0, 1]),
        T("16", &[2, 2, 0, 1]),
        T("-4", &[2, 3, 0, 1]),
        T("-2", &[3, 0, 1, 0]),
        T("6", &[3, 1, 1, 0]),
        T("-2", &[3, 1, 1, 1]),
        T("-6", &[3, 2, 1, 0]),
        T("5", &[3, 2, 1, 1]),
        T("2", &[3, 3, 1, 0]),
        T("-4", &[3, 3, 1, 1]),
        T("1", &[3, 4, 1, 1]),
        T("-2", &[4, 0, 0, 1]),
        T("8", &[4, 1, 0, 1]),
        T("-12", &[4, 2, 0, 1]),
        T("8", &[4, 3, 0, 1]),
        T("-2", &[4, 4, 0, 1]),
        T("3", &[5, 0, 1, 0]),
        T("-12", &[5, 1, 1, 0]),
        T("3", &[5, 1, 1, 1]),
        T("18", &[5, 2, 1, 0]),
        T("-11", &[5, 2, 1, 1]),
        T("-12", &[5, 3, 1, 0]),
        T("15", &[5, 3, 1, 1]),
        T("3", &[5, 4, 1, 0]),
        T("-9", &[5, 4, 1, 1]),
        T("2", &[5, 5, 1, 1]),
        T("1", &[7, 0, 1, 0]),
        T("-5", &[7, 1, 1, 0]),
        T("1", &[7, 1, 1, 1]),
        T("10", &[7, 2, 1, 0]),
        T("-4", &[7, 2, 1, 1]),
        T("-10", &[7, 3, 1, 0]),
        T("6", &[7, 3, 1, 1]),
        T("5", &[7, 4, 1, 0]),
        T("-4", &[7, 4, 1, 1]),
        T("-1", &[7, 5, 1, 0]),
        T("1", &[7, 5, 1, 1]),
        T("-3", &[9, 0, 1, 0]),
        T("18", &[9, 1, 1, 0]),
        T("-3", &[9, 1, 1, 1]),
        T("-45", &[9, 2, 1, 0]),
        T("17", &[9, 2, 1, 1]),
        T("60", &[9, 3, 1, 0]),
        T("-40", &[9, 3, 1, 1]),
        T("-45", &[9, 4, 1, 0]),
        T("50", &[9, 4, 1, 1]),
        T("18", &[9, 5, 1, 0]),
        T("-35", &[9, 5, 1, 1]),
        T("-3", &[9, 6, 1, 0]),
        T("13", &[9, 6, 1, 1]),
        T("-2", &[9, 7, 1, 1]),
        T("1", &[11, 0, 1, 0]),
        T("-7", &[11, 1, 1, 0]),
        T("1", &[11, 1, 1, 1]),
        T("21", &[11, 2, 1, 0]),
        T("-7", &[11, 2, 1, 1]),
        T("-35", &[11, 3, 1, 0]),
        T("21", &[11, 3, 1, 1]),
        T("35", &[11, 4, 1, 0]),
        T("-35", &[11, 4, 1, 1]),
        T("-21", &[11, 5, 1, 0]),
        T("35", &[11, 5, 1, 1]),
        T("7", &[11, 6, 1, 0]),
        T("-21", &[11, 6, 1, 1]),
        T("-1", &[11, 7, 1, 0]),
        T("7", &[11, 7, 1, 1]),
        T("-1", &[11, 8, 1, 1]),
    ],
    &[
        T("-4", &[0, 0, 0, 0]),
        T("12", &[0, 1, 0, 0]),
        T("-12", &[0, 2, 0, 0]),
        T("4", &[0, 3, 0, 0]),
        T("14", &[2, 0, 0, 0]),
        T("-56", &[2, 1, 0, 0]),
        T("84", &[2, 2, 0, 0]),
        T("-56", &[2, 3, 0, 0]),
        T("14", &[2, 4, 0, 0]),
        T("-18", &[4, 0, 0, 0]),
        T("90", &[4, 1, 0, 0]),
        T("-180", &[4, 2, 0, 0]),
        T("180", &[4, 3, 0, 0]),
        T("-90", &[4, 4, 0, 0]),
        T("18", &[4, 5, 0, 0]),
        T("10", &[6, 0, 0, 0]),
        T("-60", &[6, 1, 0, 0]),
        T("150", &[6, 2, 0, 0]),
        T("-200", &[6, 3, 0, 0]),
        T("150", &[6, 4, 0, 0]),
        T("-60", &[6, 5, 0, 0]),
        T("10", &[6, 6, 0, 0]),
        T("-2", &[8, 0, 0, 0]),
        T("14", &[8, 1, 0, 0]),
        T("-42", &[8, 2, 0, 0]),
        T("70", &[8, 3, 0, 0]),
        T("-70", &[8, 4, 0, 0]),
        T("42", &[8, 5, 0, 0]),
        T("-14", &[8, 6, 0, 0]),
        T("2", &[8, 7, 0, 0]),
    ],
);

pub static D11: Expr = Expr::new(
    "d11",
    4,
    &[
        T("-48", &[0, 0, 0, 0]),
        T("-24", &[0, 0, 0, 1]),
        T("72", &[0, 1, 0, 0]),
        T("-24", &[0, 2, 0, 0]),
        T("18", &[0, 2, 0, 1]),
        T("-6", &[0, 3, 0, 1]),
        T("88", &[2, 0, 0, 0]),
        T("32", &[2, 0, 0, 1]),
        T("-232", &[2, 1, 0, 0]),
        T("-44", &[2, 1, 0, 1]),
        T("200", &[2, 2, 0, 0]),
        T("-18", &[2, 2, 0, 1]),
        T("-56", &[2, 3, 0, 0]),
        T("44", &[2, 3, 0, 1]),
        T("-14", &[2, 4, 0, 1]),
        T("-6", &[3, 0, 1, 0]),
        T("12", &[3, 1, 1, 0]),
        T("-12", &[3, 1, 1, 1]),
        T("30", &[3, 2, 1, 1]),
        T("-12", &[3, 3, 1, 0]),
        T("-24", &[3, 3, 1, 1]),
        T("6", &[3, 4, 1, 0]),
        T("6", &[3, 4, 1, 1]),
        T("-60", &[4, 0, 0, 0]),
        T("-14", &[4, 0, 0, 1]),
        T("226", &[4, 1, 0, 0]),
        T("38", &[4, 1, 0, 1]),
        T("-318", &[4, 2, 0, 0]),
        T("-20", &[4, 2, 0, 1]),
        T("198", &[4, 3, 0, 0]),
        T("-28", &[4, 3, 0, 1]),
        T("-46", &[4, 4, 0, 0]),
        T("34", &[4, 4, 0, 1]),
        T("-10", &[4, 5, 0, 1]),
        T("13", &[5, 0, 1, 0]),
        T("-25", &[5, 1, 1, 0]),
        T("34", &[5, 1, 1, 1]),
        T("-30", &[5, 2, 1, 0]),
        T("-122", &[5, 2, 1, 1]),
        T("110", &[5, 3, 1, 0]),
        T("162", &[5, 3, 1, 1]),
        T("-95", &[5, 4, 1, 0]),
        T("-94", &[5, 4, 1, 1]),
        T("27", &[5, 5, 1, 0]),
        T("20", &[5, 5, 1, 1]),
        T("18", &[6, 0, 0, 0]),
        T("2", &[6, 0, 0, 1]),
        T("-88", &[6, 1, 0, 0]),
        T("-8", &[6, 1, 0, 1]),
        T("172", &[6, 2, 0, 0]),
        T("10", &[6, 2, 0, 1]),
        T("-168", &[6, 3, 0, 0]),
        T("82", &[6, 4, 0, 0]),
        T("-10", &[6, 4, 0, 1]),
        T("-16", &[6, 5, 0, 0]),
        T("8", &[6, 5, 0, 1]),
        T("-2", &[6, 6, 0, 1]),
        T("-7", &[7, 0, 1, 0]),
        T("-9", &[7, 1, 1, 0]),
        T("-30", &[7, 1, 1, 1]),
        T("150", &[7, 2, 1, 0]),
        T("142", &[7, 2, 1, 1]),
        T("-370", &[7, 3, 1, 0]),
        T("-268", &[7, 3, 1, 1]),
        T("405", &[7, 4, 1, 0]),
        T("252", &[7, 4, 1, 1]),
        T("-213", &[7, 5, 1, 0]),
        T("-118", &[7, 5, 1, 1]),
        T("44", &[7, 6, 1, 0]),
        T("22", &[7, 6, 1, 1]),
        T("-2", &[8, 0, 0, 0]),
        T("12", &[8, 1, 0, 0]),
        T("-30", &[8, 2, 0, 0]),
        T("40", &[8, 3, 0, 0]),
        T("-30", &[8, 4, 0, 0]),
        T("12", &[8, 5, 0, 0]),
        T("-2", &[8, 6, 0, 0]),
        T("-1", &[9, 0, 1, 0]),
        T("38", &[9, 1, 1, 0]),
        T("8", &[9, 1, 1, 1]),
        T("-207", &[9, 2, 1, 0]),
        T("-48", &[9, 2, 1, 1]),
        T("500", &[9, 3, 1, 0]),
        T("120", &[9, 3, 1, 1]),
        T("-655", &[9, 4, 1, 0]),
        T("-160", &[9, 4, 1, 1]),
        T("486", &[9, 5, 1, 0]),
        T("120", &[9, 5, 1, 1]),
        T("-193", &[9, 6, 1, 0]),
        T("-48", &[9, 6, 1, 1]),
        T("32", &[9, 7, 1, 0]),
        T("8", &[9, 7, 1, 1]),
        T("1", &[11, 0, 1, 0]),
        T("-17", &[11, 1, 1, 0]),
        T("91", &[11, 2, 1, 0]),
        T("-245", &[11, 3, 1, 0]),
        T("385", &[11, 4, 1, 0]),
        T("-371", &[11, 5, 1, 0]),
        T("217", &[11, 6, 1, 0]),
        T("-71", &[11, 7, 1, 0]),
        T("10", &[11, 8, 1, 0]),
        T("1", &[13, 1, 1, 0]),
        T("-8", &[13, 2, 1, 0]),
        T("28", &[13, 3, 1, 0]),
        T("-56", &[13, 4, 1, 0]),
        T("70", &[13, 5, 1, 0]),
        T("-56", &[13, 6, 1, 0]),
        T("28", &[13, 7, 1, 0]),
        T("-8", &[13, 8, 1, 0]),
        T("1", &[13, 9, 1, 0]),
    ],
    &[
        T("-4", &[1, 0, 0, 0]),
        T("12", &[1, 1, 0, 0]),
        T("-12", &[1, 2, 0, 0]),
        T("4", &[1, 3, 0, 0]),
        T("14", &[3, 0, 0, 0]),
        T("-56", &[3, 1, 0, 0]),
        T("84", &[3, 2, 0, 0]),
        T("-56", &[3, 3, 0, 0]),
        T("14", &[3, 4, 0, 0]),
        T("-18", &[5, 0, 0, 0]),
        T("90", &[5, 1, 0, 0]),
        T("-180", &[5, 2, 0, 0]),
        T("180", &[5, 3, 0, 0]),
        T("-90", &[5, 4, 0, 0]),
        T("18", &[5, 5, 0, 0]),
        T("10", &[7, 0, 0, 0]),
        T("-60", &[7, 1, 0, 0]),
        T("150", &[7, 2, 0, 0]),
        T("-200", &[7, 3, 0, 0]),
        T("150", &[7, 4, 0, 0]),
        T("-60", &[7, 5, 0, 0]),
        T("10", &[7, 6, 0, 0]),
        T("-2", &[9, 0, 0, 0]),
        T("14", &[9, 1, 0, 0]),
        T("-42", &[9, 2, 0, 0]),
        T("70", &[9, 3, 0, 0]),
        T("-70", &[9, 4, 0, 0]),
        T("42", &[9, 5, 0, 0]),
        T("-14", &[9, 6, 0, 0]),
        T("2", &[9, 7, 0, 0]),
    ],
);

pub static D20: Expr = Expr::new(
    "d20",
    4,
    &[
        T("-96", &[0, 0, 0, 0]),
        T("-48", &[0, 0, 0, 1]),
        T("192", &[0, 1, 0, 0]),
        T("24", &[0, 1, 0, 1]),
        T("-120", &[0, 2, 0, 0]),
        T("36", &[0, 2, 0, 1]),
        T("24", &[0, 3, 0, 0]),
        T("-30", &[0, 3, 0, 1]),
        T("6", &[0, 4, 0, 1]),
        T("256", &[2, 0, 0, 0]),
        T("88", &[2, 0, 0, 1]),
        T("-816", &[2, 1, 0, 0]),
        T("-136", &[2, 1, 0, 1]),
        T("952", &[2, 2, 0, 0]),
        T("-66", &[2, 2, 0, 1]),
        T("-480", &[2, 3, 0, 0]),
        T("220", &[2, 3, 0, 1]),
        T("88", &[2, 4, 0, 0]),
        T("-130", &[2, 4, 0, 1]),
        T("24", &[2, 5, 0, 1]),
        T("-12", &[3, 0, 1, 0]),
        T("30", &[3, 1, 1, 0]),
        T("-24", &[3, 1, 1, 1]),
        T("-12", &[3, 2, 1, 0]),
        T("72", &[3, 2, 1, 1]),
        T("-24", &[3, 3, 1, 0]),
        T("-78", &[3, 3, 1, 1]),
        T("24", &[3, 4, 1, 0]),
        T("36", &[3, 4, 1, 1]),
        T("-6", &[3, 5, 1, 0]),
        T("-6", &[3, 5, 1, 1]),
        T("-256", &[4, 0, 0, 0]),
        T("-60", &[4, 0, 0, 1]),
        T("1128", &[4, 1, 0, 0]),
        T("150", &[4, 1, 0, 1]),
        T("-1970", &[4, 2, 0, 0]),
        T("12", &[4, 2, 0, 1]),
        T("1702", &[4, 3, 0, 0]),
        T("-372", &[4, 3, 0, 1]),
        T("-726", &[4, 4, 0, 0]),
        T("444", &[4, 4, 0, 1]),
        T("122", &[4, 5, 0, 0]),
        T("-210", &[4, 5, 0, 1]),
        T("36", &[4, 6, 0, 1]),
        T("48", &[5, 0, 1, 0]),
        T("-167", &[5, 1, 1, 0]),
        T("88", &[5, 1, 1, 1]),
        T("159", &[5, 2, 1, 0]),
        T("-364", &[5, 2, 1, 1]),
        T("74", &[5, 3, 1, 0]),
        T("592", &[5, 3, 1, 1]),
        T("-226", &[5, 4, 1, 0]),
        T("-472", &[5, 4, 1, 1]),
        T("141", &[5, 5, 1, 0]),
        T("184", &[5, 5, 1, 1]),
        T("-29", &[5, 6, 1, 0]),
        T("-28", &[5, 6, 1, 1]),
        T("120", &[6, 0, 0, 0]),
        T("18", &[6, 0, 0, 1]),
        T("-676", &[6, 1, 0, 0]),
        T("-60", &[6, 1, 0, 1]),
        T("1582", &[6, 2, 0, 0]),
        T("6", &[6, 2, 0, 1]),
        T("-1968", &[6, 3, 0, 0]),
        T("240", &[6, 3, 0, 1]),
        T("1372", &[6, 4, 0, 0]),
        T("-450", &[6, 4, 0, 1]),
        T("-508", &[6, 5, 0, 0]),
        T("372", &[6, 5, 0, 1]),
        T("78", &[6, 6, 0, 0]),
        T("-150", &[6, 6, 0, 1]),
        T("24", &[6, 7, 0, 1]),
        T("-59", &[7, 0, 1, 0]),
        T("244", &[7, 1, 1, 0]),
        T("-110", &[7, 1, 1, 1]),
        T("-278", &[7, 2, 1, 0]),
        T("588", &[7, 2, 1, 1]),
        T("-205", &[7, 3, 1, 0]),
        T("-1300", &[7, 3, 1, 1]),
        T("785", &[7, 4, 1, 0]),
        T("1520", &[7, 4, 1, 1]),
        T("-766", &[7, 5, 1, 0]),
        T("-990", &[7, 5, 1, 1]),
        T("336", &[7, 6, 1, 0]),
        T("340", &[7, 6, 1, 1]),
        T("-57", &[7, 7, 1, 0]),
        T("-48", &[7, 7, 1, 1]),
        T("-26", &[8, 0, 0, 0]),
        T("-2", &[8, 0, 0, 1]),
        T("178", &[8, 1, 0, 0]),
        T("8", &[8, 1, 0, 1]),
        T("-522", &[8, 2, 0, 0]),
        T("850", &[8, 3, 0, 0]),
        T("-56", &[8, 3, 0, 1]),
        T("-830", &[8, 4, 0, 0]),
        T("140", &[8, 4, 0, 1]),
        T("486", &[8, 5, 0, 0]),
        T("-168", &[8, 5, 0, 1]),
        T("-158", &[8, 6, 0, 0]),
        T("112", &[8, 6, 0, 1]),
        T("22", &[8, 7, 0, 0]),
        T("-40", &[8, 7, 0, 1]),
        T("6", &[8, 8, 0, 1]),
        T("25", &[9, 0, 1, 0]),
        T("-90", &[9, 1, 1, 0]),
        T("56", &[9, 1, 1, 1]),
        T("-43", &[9, 2, 1, 0]),
        T("-372", &[9, 2, 1, 1]),
        T("748", &[9, 3, 1, 0]),
        T("1056", &[9, 3, 1, 1]),
        T("-1695", &[9, 4, 1, 0]),
        T("-1660", &[9, 4, 1, 1]),
        T("1910", &[9, 5, 1, 0]),
        T("1560", &[9, 5, 1, 1]),
        T("-1205", &[9, 6, 1, 0]),
        T("-876", &[9, 6, 1, 1]),
        T("408", &[9, 7, 1, 0]),
        T("272", &[9, 7, 1, 1]),
        T("-58", &[9, 8, 1, 0]),
        T("-36", &[9, 8, 1, 1]),
        T("2", &[10, 0, 0, 0]),
        T("-16", &[10, 1, 0, 0]),
        T("56", &[10, 2, 0, 0]),
        T("-112", &[10, 3, 0, 0]),
        T("140", &[10, 4, 0, 0]),
        T("-112", &[10, 5, 0, 0]),
        T("56", &[10, 6, 0, 0]),
        T("-16", &[10, 7, 0, 0]),
        T("2", &[10, 8, 0, 0]),
        T("-1", &[11, 0, 1, 0]),
        T("-31", &[11, 1, 1, 0]),
        T("-10", &[11, 1, 1, 1]),
        T("277", &[11, 2, 1, 0]),
        T("80", &[11, 2, 1, 1]),
        T("-987", &[11, 3, 1, 0]),
        T("-280", &[11, 3, 1, 1]),
        T("1967", &[11, 4, 1, 0]),
        T("560", &[11, 4, 1, 1]),
        T("-2429", &[11, 5, 1, 0]),
        T("-700", &[11, 5, 1, 1]),
        T("1911", &[11, 6, 1, 0]),
        T("560", &[11, 6, 1, 1]),
        T("-937", &[11, 7, 1, 0]),
        T("-280", &[11, 7, 1, 1]),
        T("262", &[11, 8, 1, 0]),
        T("80", &[11, 8, 1, 1]),
        T("-32", &[11, 9, 1, 0]),
        T("-10", &[11, 9, 1, 1]),
        T("-1", &[13, 0, 1, 0]),
        T("19", &[13, 1, 1, 0]),
        T("-125", &[13, 2, 1, 0]),
        T("436", &[13, 3, 1, 0]),
        T("-938", &[13, 4, 1, 0]),
        T("1330", &[13, 5, 1, 0]),
        T("-1274", &[13, 6, 1, 0]),
        T("820", &[13, 7, 1, 0]),
        T("-341", &[13, 8, 1, 0]),
        T("83", &[13, 9, 1, 0]),
        T("-9", &[13, 10, 1, 0]),
        T("-1", &[15, 1, 1, 0]),
        T("10", &[15, 2, 1, 0]),
        T("-45", &[15, 3, 1, 0]),
        T("120", &[15, 4, 1, 0]),
        T("-210", &[15, 5, 1, 0]),
        T("252", &[15, 6, 1, 0]),
        T("-210", &[15, 7, 1, 0]),
        T("120", &[15, 8, 1, 0]),
        T("-45", &[15, 9, 1, 0]),
        T("10", &[15, 10, 1, 0]),
        T("-1", &[15, 11, 1, 0]),
    ],
    &[
        T("8", &[1, 0, 0, 0]),
        T("-32", &[1, 1, 0, 0]),
        T("48", &[1, 2, 0, 0]),
        T("-32", &[1, 3, 0, 0]),
        T("8", &[1, 4, 0, 0]),
        T("-36", &[3, 0, 0, 0]),
        T("180", &[3, 1, 0, 0]),
        T("-360", &[3, 2, 0, 0]),
        T("360", &[3, 3, 0, 0]),
        T("-180", &[3, 4, 0, 0]),
        T("36", &[3, 5, 0, 0]),
        T("64", &[5, 0, 0, 0]),
        T("-384", &[5, 1, 0, 0]),
        T("960", &[5, 2, 0, 0]),
        T("-1280", &[5, 3, 0, 0]),
        T("960", &[5, 4, 0, 0]),
        T("-384", &[5, 5, 0, 0]),
        T("64", &[5, 6, 0, 0]),
        T("-56", &[7, 0, 0, 0]),
        T("392", &[7, 1, 0, 0]),
        T("-1176", &[7, 2, 0, 0]),
        T("1960", &[7, 3, 0, 0]),
        T("-1960", &[7, 4, 0, 0]),
        T("1176", &[7, 5, 0, 0]),
        T("-392", &[7, 6, 0, 0]),
        T("56", &[7, 7, 0, 0]),
        T("24", &[9, 0, 0, 0]),
        T("-192", &[9, 1, 0, 0]),
        T("672", &[9, 2, 0, 0]),
        T("-1344", &[9, 3, 0, 0]),
        T("1680", &[9, 4, 0, 0]),
        T("-1344", &[9, 5, 0, 0]),
        T("672", &[9, 6, 0, 0]),
        T("-192", &[9, 7, 0, 0]),
        T("24", &[9, 8, 0, 0]),
        T("-4", &[11, 0, 0, 0]),
        T("36", &[11, 1, 0, 0]),
        T("-144", &[11, 2, 0, 0]),
        T("336", &[11, 3, 0, 0]),
        T("-504", &[11, 4, 0, 0]),
        T("504", &[11, 5, 0, 0]),
        T("-336", &[11, 6, 0, 0]),
        T("144", &[11, 7, 0, 0]),
        T("-36", &[11, 8, 0, 0]),
        T("4", &[11, 9, 0, 0]),
    ],
);

pub static E00: Expr = Expr::new(
    "e00",
    12,
    &[
        T("1", &[0, 10, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("-2", &[1, 8, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("-1", &[1, 9, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-2", &[2, 6, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("1", &[2, 7, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("1", &[2, 8, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("4", &[3, 5, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("2", &[4, 3, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-5", &[4, 4, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-6", &[5, 2, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-2", &[6, 0, 4, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    ],
    &[T("1", &[0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
);

pub static E10: Expr = Expr::new(
    "e10",
    12,
    &[
        T("-2", &[0, 8, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("1", &[0, 9, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
        T("-1", &[0, 9, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("1", &[0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
        T("-4", &[1, 6, 2, 1, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("2", &[1, 7, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
        T("2", &[1, 7, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("2", &[1, 8, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-2", &[1, 8, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
        T("-1", &[1, 9, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("12", &[2, 5, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-5", &[2, 6, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
        T("-2", &[2, 6, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
        T("-1", &[2, 7, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("1", &[2, 7, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("8", &[3, 3, 3, 1, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-4", &[3, 4, 2, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
        T("-20", &[3, 4, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("6", &[3, 5, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("4", &[3, 5, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("-30", &[4, 2, 3, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("13", &[4, 3, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("2", &[4, 3, 3, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("-12", &[5, 0, 4, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("6", &[5, 1, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    ],
    &[T("1", &[0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
);

pub static E01: Expr = Expr::new(
    "e01",
    12,
    &[
        T("2", &[0, 8, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("1", &[0, 9, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("1", &[0, 9, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
        T("4", &[1, 6, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("-2", &[1, 7, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-2", &[1, 8, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-1", &[1, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        T("-12", &[2, 5, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-1", &[2, 6, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        T("-8", &[3, 3, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("20", &[3, 4, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("30", &[4, 2, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("12", &[5, 0, 4, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    ],
    &[T("1", &[0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
);

pub static E20: Expr = Expr::new(
    "e20",
    12,
    &[
        T("-2", &[0, 6, 2, 2, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("2", &[0, 7, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0]),
        T("1", &[0, 7, 1, 2, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("1", &[0, 8, 0, 2, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-2", &[0, 8, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0]),
        T("-2", &[0, 8, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0]),
        T("-1", &[0, 9, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0]),
        T("1", &[0, 9, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
        T("-1", &[0, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("1", &[0, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        T("12", &[1, 5, 2, 2, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-10", &[1, 6, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0]),
        T("-4", &[1, 6, 2, 1, 0, 0, 0, 0, 0, 1, 0, 0]),
        T("1", &[1, 7, 0, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
        T("-2", &[1, 7, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("4", &[1, 7, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0]),
        T("2", &[1, 7, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
        T("2", &[1, 7, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("2", &[1, 8, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0]),
        T("-2", &[1, 8, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        T("12", &[2, 3, 3, 2, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-12", &[2, 4, 2, 1, 1, 0, 0, 1, 0, 0, 0, 0]),
        T("-30", &[2, 4, 2, 2, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("2", &[2, 5, 1, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
        T("18", &[2, 5, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("4", &[2, 5, 2, 0, 0, 1, 0, 1, 0, 0, 0, 0]),
        T("12", &[2, 5, 2, 1, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("-1", &[2, 6, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
        T("-4", &[2, 6, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0]),
        T("-5", &[2, 6, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0]),
        T("-2", &[2, 6, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        T("-60", &[3, 2, 3, 2, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("52", &[3, 3, 2, 1, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("8", &[3, 3, 3, 1, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("-8", &[3, 4, 1, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
        T("-12", &[3, 4, 2, 0, 0, 1, 0, 0, 1, 0, 0, 0]),
        T("-4", &[3, 4, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0]),
        T("-30", &[4, 0, 4, 2, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("30", &[4, 1, 3, 1, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("-6", &[4, 2, 2, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
        T("-6", &[4, 2, 3, 0, 0, 1, 0, 0, 1, 0, 0, 0]),
    ],
    &[T("1", &[0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
);

pub static E02: Expr = Expr::new(
    "e02",
    12,
    &[
        T("-2", &[0, 6, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("1", &[0, 7, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("1", &[0, 8, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("1", &[0, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        T("12", &[1, 5, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("2", &[1, 6, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        T("12", &[2, 3, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-30", &[2, 4, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-60", &[3, 2, 3, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-30", &[4, 0, 4, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    ],
    &[T("1", &[0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
);

pub static E11: Expr = Expr::new(
    "e11",
    12,
    &[
        T("4", &[0, 6, 2, 1, 0, 0, 1, 0, 0, 0, 0, 0]),
        T("-2", &[0, 7, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
        T("-2", &[0, 7, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("-2", &[0, 8, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-1", &[0, 8, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
        T("2", &[0, 8, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
        T("1", &[0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("2", &[0, 9, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
        T("-24", &[1, 5, 2, 1, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("10", &[1, 6, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
        T("-2", &[1, 6, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
        T("4", &[1, 6, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
        T("2", &[1, 7, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("1", &[1, 7, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
        T("-2", &[1, 7, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("-24", &[2, 3, 3, 1, 0, 0, 0, 1, 0, 0, 0, 0]),
        T("12", &[2, 4, 2, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
        T("60", &[2, 4, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-18", &[2, 5, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("-12", &[2, 5, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("120", &[3, 2, 3, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-52", &[3, 3, 2, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
        T("-8", &[3, 3, 3, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        T("60", &[4, 0, 4, 1, 0, 0, 0, 0, 1, 0, 0, 0]),
        T("-30", &[4, 1, 3, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    ],
    &[T("1", &[0, 9, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])],
);

pub static G01: Expr = Expr::new(
    "g01",
    2,
    &[
        T("12", &[0, 0]),
        T("-6", &[0, 1]),
        T("-8", &[2, 0]),
        T("15", &[2, 1]),
        T("-7", &[2, 2]),
        T("1", &[4, 0]),
        T("-3", &[4, 1]),
        T("3", &[4, 2]),
        T("-1", &[4, 3]),
    ],
    &[
        T("6", &[3, 1]),
        T("-12", &[3, 2]),
        T("6", &[3, 3]),
        T("8", &[5, 0]),
        T("-36", &[5, 1]),
        T("60", &[5, 2]),
        T("-44", &[5, 3]),
        T("12", &[5, 4]),
        T("-4", &[7, 0]),
        T("22", &[7, 1]),
        T("-48", &[7, 2]),
        T("52", &[7, 3]),
        T("-28", &[7, 4]),
        T("6", &[7, 5]),
    ],
);

pub static G10: Expr = Expr::new(
    "g10",
    2,
    &[
        T("-864", &[0, 0]),
        T("2592", &[0, 1]),
        T("-864", &[0, 2]),
        T("-108", &[0, 3]),
        T("2160", &[2, 0]),
        T("-11088", &[2, 1]),
        T("12168", &[2, 2]),
        T("-2628", &[2, 3]),
        T("-612", &[2, 4]),
        T("-1152", &[4, 0]),
        T("13632", &[4, 1]),
        T("-28200", &[4, 2]),
        T("18657", &[4, 3]),
        T("-1482", &[4, 4]),
        T("-1455", &[4, 5]),
        T("-1256", &[6, 0]),
        T("-2192", &[6, 1]),
        T("16330", &[6, 2]),
        T("-21402", &[6, 3]),
        T("6986", &[6, 4]),
        T("3410", &[6, 5]),
        T("-1876", &[6, 6]),
        T("1810", &[8, 0]),
        T("-6762", &[8, 1]),
        T("9238", &[8, 2]),
        T("-6947", &[8, 3]),
        T("7298", &[8, 4]),
        T("-9172", &[8, 5]),
        T("5950", &[8, 6]),
        T("-1415", &[8, 7]),
        T("-881", &[10, 0]),
        T("5141", &[10, 1]),
        T("-13206", &[10, 2]),
        T("20378", &[10, 3]),
        T("-22065", &[10, 4]),
        T("18001", &[10, 5]),
        T("-10596", &[10, 6]),
        T("3856", &[10, 7]),
        T("-628", &[10, 8]),
        T("205", &[12, 0]),
        T("-1514", &[12, 1]),
        T("5039", &[12, 2]),
        T("-10077", &[12, 3]),
        T("13597", &[12, 4]),
        T("-13045", &[12, 5]),
        T("8949", &[12, 6]),
        T("-4199", &[12, 7]),
        T("1202", &[12, 8]),
        T("-157", &[12, 9]),
        T("-23", &[14, 0]),
        T("201", &[14, 1]),
        T("-801", &[14, 2]),
        T("1931", &[14, 3]),
        T("-3143", &[14, 4]),
        T("3633", &[14, 5]),
        T("-3031", &[14, 6]),
        T("1801", &[14, 7]),
        T("-726", &[14, 8]),
        T("178", &[14, 9]),
        T("-20", &[14, 10]),
        T("1", &[16, 0]),
        T("-10", &[16, 1]),
        T("46", &[16, 2]),
        T("-129", &[16, 3]),
        T("246", &[16, 4]),
        T("-336", &[16, 5]),
        T("336", &[16, 6]),
        T("-246", &[16, 7]),
        T("129", &[16, 8]),
        T("-46", &[16, 9]),
        T("10", &[16, 10]),
        T("-1", &[16, 11]),
    ],
    &[
        T("324", &[3, 4]),
        T("-648", &[3, 5]),
        T("324", &[3, 6]),
        T("1728", &[5, 3]),
        T("-7776", &[5, 4]),
        T("12960", &[5, 5]),
        T("-9504", &[5, 6]),
        T("2592", &[5, 7]),
        T("3456", &[7, 2]),
        T("-25056", &[7, 3]),
        T("74736", &[7, 4]),
        T("-117504", &[7, 5]),
        T("102816", &[7, 6]),
        T("-47520", &[7, 7]),
        T("9072", &[7, 8]),
        T("3072", &[9, 1]),
        T("-32640", &[9, 2]),
        T("148224", &[9, 3]),
        T("-377184", &[9, 4]),
        T("589920", &[9, 5]),
        T("-581952", &[9, 6]),
        T("354240", &[9, 7]),
        T("-121824", &[9, 8]),
        T("18144", &[9, 9]),
        T("1024", &[11, 0]),
        T("-16896", &[11, 1]),
        T("115296", &[11, 2]),
        T("-441824", &[11, 3]),
        T("1069560", &[11, 4]),
        T("-1724784", &[11, 5]),
        T("1887496", &[11, 6]),
        T("-1389696", &[11, 7]),
        T("660744", &[11, 8]),
        T("-183600", &[11, 9]),
        T("22680", &[11, 10]),
        T("-2048", &[13, 0]),
        T("28928", &[13, 1]),
        T("-183168", &[13, 2]),
        T("687424", &[13, 3]),
        T("-1701280", &[13, 4]),
        T("2918496", &[13, 5]),
        T("-3544352", &[13, 6]),
        T("3049568", &[13, 7]),
        T("-1822944", &[13, 8]),
        T("721440", &[13, 9]),
        T("-170208", &[13, 10]),
        T("18144", &[13, 11]),
        T("1536", &[15, 0]),
        T("-21888", &[15, 1]),
        T("142272", &[15, 2]),
        T("-557856", &[15, 3]),
        T("1469808", &[15, 4]),
        T("-2741760", &[15, 5]),
        T("3713472", &[15, 6]),
        T("-3680064", &[15, 7]),
        T("2648736", &[15, 8]),
        T("-1350528", &[15, 9]),
        T("463104", &[15, 10]),
        T("-95904", &[15, 11]),
        T("9072", &[15, 12]),
        T("-512", &[17, 0]),
        T("7680", &[17, 1]),
        T("-52992", &[17, 2]),
        T("222720", &[17, 3]),
        T("-636192", &[17, 4]),
        T("1304352", &[17, 5]),
        T("-1974912", &[17, 6]),
        T("2236032", &[17, 7]),
        T("-1893312", &[17, 8]),
        T("1184192", &[17, 9]),
        T("-531840", &[17, 10]),
        T("162432", &[17, 11]),
        T("-30240", &[17, 12]),
        T("2592", &[17, 13]),
        T("64", &[19, 0]),
        T("-1024", &[19, 1]),
        T("7584", &[19, 2]),
        T("-34464", &[19, 3]),
        T("107364", &[19, 4]),
        T("-242568", &[19, 5]),
        T("409908", &[19, 6]),
        T("-526368", &[19, 7]),
        T("516168", &[19, 8]),
        T("-384688", &[19, 9]),
        T("214504", &[19, 10]),
        T("-86784", &[19, 11]),
        T("24084", &[19, 12]),
        T("-4104", &[19, 13]),
        T("324", &[19, 14]),
    ],
);

pub static H01: Expr = Expr::new(
    "h01",
    2,
    &[
        T("12", &[0, 0]),
        T("-12", &[0, 1]),
        T("-32", &[2, 0]),
        T("64", &[2, 1]),
        T("-32", &[2, 2]),
        T("29", &[4, 0]),
        T("-87", &[4, 1]),
        T("87", &[4, 2]),
        T("-29", &[4, 3]),
        T("-10", &[6, 0]),
        T("40", &[6, 1]),
        T("-60", &[6, 2]),
        T("40", &[6, 3]),
        T("-10", &[6, 4]),
        T("1", &[8, 0]),
        T("-5", &[8, 1]),
        T("10", &[8, 2]),
        T("-10", &[8, 3]),
        T("5", &[8, 4]),
        T("-1", &[8, 5]),
    ],
    &[
        T("-24", &[0, 1]),
        T("12", &[0, 2]),
        T("-32", &[2, 0]),
        T("108", &[2, 1]),
        T("-112", &[2, 2]),
        T("36", &[2, 3]),
        T("32", &[4, 0]),
        T("-136", &[4, 1]),
        T("212", &[4, 2]),
        T("-144", &[4, 3]),
        T("36", &[4, 4]),
        T("-8", &[6, 0]),
        T("44", &[6, 1]),
        T("-96", &[6, 2]),
        T("104", &[6, 3]),
        T("-56", &[6, 4]),
        T("12", &[6, 5]),
    ],
);

pub static H10: Expr = Expr::new(
    "h10",
    2,
    &[
        T("2592", &[0, 0]),
        T("-3888", &[0, 1]),
        T("2376", &[0, 2]),
        T("-1080", &[0, 3]),
        T("-16848", &[2, 0]),
        T("44208", &[2, 1]),
        T("-45468", &[2, 2]),
        T("25704", &[2, 3]),
        T("-7596", &[2, 4]),
        T("47520", &[4, 0]),
        T("-178176", &[4, 1]),
        T("272694", &[4, 2]),
        T("-224226", &[4, 3]),
        T("105474", &[4, 4]),
        T("-23286", &[4, 5]),
        T("-76152", &[6, 0]),
        T("371356", &[6, 1]),
        T("-764641", &[6, 2]),
        T("868044", &[6, 3]),
        T("-587566", &[6, 4]),
        T("229696", &[6, 5]),
        T("-40737", &[6, 6]),
        T("76266", &[8, 0]),
        T("-457933", &[8, 1]),
        T("1190390", &[8, 2]),
        T("-1752265", &[8, 3]),
        T("1594510", &[8, 4]),
        T("-906431", &[8, 5]),
        T("300178", &[8, 6]),
        T("-44715", &[8, 7]),
        T("-49485", &[10, 0]),
        T("352926", &[10, 1]),
        T("-1110264", &[10, 2]),
        T("2021298", &[10, 3]),
        T("-2340990", &[10, 4]),
        T("1775010", &[10, 5]),
        T("-863976", &[10, 6]),
        T("247374", &[10, 7]),
        T("-31893", &[10, 8]),
        T("20883", &[12, 0]),
        T("-172428", &[12, 1]),
        T("637083", &[12, 2]),
        T("-1385769", &[12, 3]),
        T("1960581", &[12, 4]),
        T("-1875573", &[12, 5]),
        T("1215753", &[12, 6]),
        T("-515643", &[12, 7]),
        T("129924", &[12, 8]),
        T("-14811", &[12, 9]),
        T("-5610", &[14, 0]),
        T("52596", &[14, 1]),
        T("-223179", &[14, 2]),
        T("565176", &[14, 3]),
        T("-947184", &[14, 4]),
        T("1099056", &[14, 5]),
        T("-895146", &[14, 6]),
        T("505704", &[14, 7]),
        T("-189726", &[14, 8]),
        T("42684", &[14, 9]),
        T("-4371", &[14, 10]),
        T("912", &[16, 0]),
        T("-9561", &[16, 1]),
        T("45786", &[16, 2]),
        T("-132309", &[16, 3]),
        T("256536", &[16, 4]),
        T("-350658", &[16, 5]),
        T("344988", &[16, 6]),
        T("-244386", &[16, 7]),
        T("122184", &[16, 8]),
        T("-41061", &[16, 9]),
        T("8346", &[16, 10]),
        T("-777", &[16, 11]),
        T("-81", &[18, 0]),
        T("938", &[18, 1]),
        T("-5000", &[18, 2]),
        T("16230", &[18, 3]),
        T("-35745", &[18, 4]),
        T("56292", &[18, 5]),
        T("-65016", &[18, 6]),
        T("55500", &[18, 7]),
        T("-34755", &[18, 8]),
        T("15570", &[18, 9]),
        T("-4736", &[18, 10]),
        T("878", &[18, 11]),
        T("-75", &[18, 12]),
        T("3", &[20, 0]),
        T("-38", &[20, 1]),
        T("223", &[20, 2]),
        T("-803", &[20, 3]),
        T("1980", &[20, 4]),
        T("-3531", &[20, 5]),
        T("4686", &[20, 6]),
        T("-4686", &[20, 7]),
        T("3531", &[20, 8]),
        T("-1980", &[20, 9]),
        T("803", &[20, 10]),
        T("-223", &[20, 11]),
        T("38", &[20, 12]),
        T("-3", &[20, 13]),
    ],
    &[
        T("-1296", &[0, 4]),
        T("648", &[0, 5]),
        T("-6912", &[2, 3]),
        T("21384", &[2, 4]),
        T("-20304", &[2, 5]),
        T("5832", &[2, 6]),
        T("-13824", &[4, 2]),
        T("82944", &[4, 3]),
        T("-191808", &[4, 4]),
        T("213408", &[4, 5]),
        T("-114048", &[4, 6]),
        T("23328", &[4, 7]),
        T("-12288", &[6, 1]),
        T("119040", &[6, 2]),
        T("-471744", &[6, 3]),
        T("999264", &[6, 4]),
        T("-1227840", &[6, 5]),
        T("877824", &[6, 6]),
        T("-338688", &[6, 7]),
        T("54432", &[6, 8]),
        T("-4096", &[8, 0]),
        T("67584", &[8, 1]),
        T("-433280", &[8, 2]),
        T("1496896", &[8, 3]),
        T("-3147360", &[8, 4]),
        T("4231664", &[8, 5]),
        T("-3666816", &[8, 6]),
        T("1984608", &[8, 7]),
        T("-610848", &[8, 8]),
        T("81648", &[8, 9]),
        T("10240", &[10, 0]),
        T("-137216", &[10, 1]),
        T("806080", &[10, 2]),
        T("-2745280", &[10, 3]),
        T("6020336", &[10, 4]),
        T("-8902048", &[10, 5]),
        T("9003216", &[10, 6]),
        T("-6157440", &[10, 7]),
        T("2728080", &[10, 8]),
        T("-707616", &[10, 9]),
        T("81648", &[10, 10]),
        T("-10240", &[12, 0]),
        T("136192", &[12, 1]),
        T("-816384", &[12, 2]),
        T("2912384", &[12, 3]),
        T("-6872384", &[12, 4]),
        T("11266464", &[12, 5]),
        T("-13097344", &[12, 6]),
        T("10799584", &[12, 7]),
        T("-6191424", &[12, 8]),
        T("2350944", &[12, 9]),
        T("-532224", &[12, 10]),
        T("54432", &[12, 11]),
        T("5120", &[14, 0]),
        T("-71424", &[14, 1]),
        T("454528", &[14, 2]),
        T("-1744960", &[14, 3]),
        T("4501344", &[14, 4]),
        T("-8220608", &[14, 5]),
        T("10899392", &[14, 6]),
        T("-10572096", &[14, 7]),
        T("7446400", &[14, 8]),
        T("-3714624", &[14, 9]),
        T("1245888", &[14, 10]),
        T("-252288", &[14, 11]),
        T("23328", &[14, 12]),
        T("-1280", &[16, 0]),
        T("19072", &[16, 1]),
        T("-130688", &[16, 2]),
        T("545344", &[16, 3]),
        T("-1546256", &[16, 4]),
        T("3146056", &[16, 5]),
        T("-4726016", &[16, 6]),
        T("5307616", &[16, 7]),
        T("-4456736", &[16, 8]),
        T("2763696", &[16, 9]),
        T("-1230336", &[16, 10]),
        T("372384", &[16, 11]),
        T("-68688", &[16, 12]),
        T("5832", &[16, 13]),
        T("128", &[18, 0]),
        T("-2048", &[18, 1]),
        T("15168", &[18, 2]),
        T("-68928", &[18, 3]),
        T("214728", &[18, 4]),
        T("-485136", &[18, 5]),
        T("819816", &[18, 6]),
        T("-1052736", &[18, 7]),
        T("1032336", &[18, 8]),
        T("-769376", &[18, 9]),
        T("429008", &[18, 10]),
        T("-173568", &[18, 11]),
        T("48168", &[18, 12]),
        T("-8208", &[18, 13]),
        T("648", &[18, 14]),
    ],
);

pub static F11: Expr = Expr::new(
    "f11",
    2,
    &[
        T("8", &[0, 0]),
        T("-8", &[0, 1]),
        T("2", &[0, 2]),
        T("-8", &[2, 0]),
        T("20", &[2, 1]),
        T("-16", &[2, 2]),
        T("4", &[2, 3]),
        T("2", &[4, 0]),
        T("-8", &[4, 1]),
        T("12", &[4, 2]),
        T("-8", &[4, 3]),
        T("2", &[4, 4]),
    ],
    &[
        T("-2", &[3, 0]),
        T("6", &[3, 1]),
        T("-6", &[3, 2]),
        T("2", &[3, 3]),
        T("5", &[5, 0]),
        T("-20", &[5, 1]),
        T("30", &[5, 2]),
        T("-20", &[5, 3]),
        T("5", &[5, 4]),
        T("-4", &[7, 0]),
        T("20", &[7, 1]),
        T("-40", &[7, 2]),
        T("40", &[7, 3]),
        T("-20", &[7, 4]),
        T("4", &[7, 5]),
        T("1", &[9, 0]),
        T("-6", &[9, 1]),
        T("15", &[9, 2]),
        T("-20", &[9, 3]),
        T("15", &[9, 4]),
        T("-6", &[9, 5]),
        T("1", &[9, 6]),
    ],
);

pub static F12: Expr = Expr::new(
    "f12",
    2,
    &[
        T("16", &[0, 0]),
        T("-24", &[0, 1]),
        T("12", &[0, 2]),
        T("-2", &[0, 3]),
        T("-24", &[2, 0]),
        T("72", &[2, 1]),
        T("-78", &[2, 2]),
        T("36", &[2, 3]),
        T("-6", &[2, 4]),
        T("12", &[4, 0]),
        T("-54", &[4, 1]),
        T("96", &[4, 2]),
        T("-84", &[4, 3]),
        T("36", &[4, 4]),
        T("-6", &[4, 5]),
        T("-2", &[6, 0]),
        T("12", &[6, 1]),
        T("-30", &[6, 2]),
        T("40", &[6, 3]),
        T("-30", &[6, 4]),
        T("12", &[6, 5]),
        T("-2", &[6, 6]),
    ],
    &[
        T("4", &[3, 0]),
        T("-16", &[3, 1]),
        T("24", &[3, 2]),
        T("-16", &[3, 3]),
        T("4", &[3, 4]),
        T("-16", &[5, 0]),
        T("80", &[5, 1]),
        T("-160", &[5, 2]),
        T("160", &[5, 3]),
        T("-80", &[5, 4]),
        T("16", &[5, 5]),
        T("25", &[7, 0]),
        T("-150", &[7, 1]),
        T("375", &[7, 2]),
        T("-500", &[7, 3]),
        T("375", &[7, 4]),
        T("-150", &[7, 5]),
        T("25", &[7, 6]),
        T("-19", &[9, 0]),
        T("133", &[9, 1]),
        T("-399", &[9, 2]),
        T("665", &[9, 3]),
        T("-665", &[9, 4]),
        T("399", &[9, 5]),
        T("-133", &[9, 6]),
        T("19", &[9, 7]),
        T("7", &[11, 0]),
        T("-56", &[11, 1]),
        T("196", &[11, 2]),
        T("-392", &[11, 3]),
        T("490", &[11, 4]),
        T("-392", &[11, 5]),
        T("196", &[11, 6]),
        T("-56", &[11, 7]),
        T("7", &[11, 8]),
        T("-1", &[13, 0]),
        T("9", &[13, 1]),
        T("-36", &[13, 2]),
        T("84", &[13, 3]),
        T("-126", &[13, 4]),
        T("126", &[13, 5]),
        T("-84", &[13, 6]),
        T("36", &[13, 7]),
        T("-9", &[13, 8]),
        T("1", &[13, 9]),
    ],
);

pub static F22: Expr = Expr::new(
    "f22",
    2,
    &[
        T("384", &[0, 0]),
        T("-960", &[0, 1]),
        T("1104", &[0, 2]),
        T("-696", &[0, 3]),
        T("228", &[0, 4]),
        T("-30", &[0, 5]),
        T("-1408", &[2, 0]),
        T("5792", &[2, 1]),
        T("-10232", &[2, 2]),
        T("9912", &[2, 3]),
        T("-5494", &[2, 4]),
        T("1630", &[2, 5]),
        T("-200", &[2, 6]),
        T("2400", &[4, 0]),
        T("-13600", &[4, 1]),
        T("33260", &[4, 2]),
        T("-45406", &[4, 3]),
        T("37250", &[4, 4]),
        T("-18292", &[4, 5]),
        T("4958", &[4, 6]),
        T("-570", &[4, 7]),
        T("-2400", &[6, 0]),
        T("17168", &[6, 1]),
        T("-53730", &[6, 2]),
        T("95952", &[6, 3]),
        T("-106776", &[6, 4]),
        T("75696", &[6, 5]),
        T("-33330", &[6, 6]),
        T("8320", &[6, 7]),
        T("-900", &[6, 8]),
        T("1480", &[8, 0]),
        T("-12716", &[8, 1]),
        T("48460", &[8, 2]),
        T("-107428", &[8, 3]),
        T("152552", &[8, 4]),
        T("-143798", &[8, 5]),
        T("89908", &[8, 6]),
        T("-35928", &[8, 7]),
        T("8320", &[8, 8]),
        T("-850", &[8, 9]),
        T("-552", &[10, 0]),
        T("5522", &[10, 1]),
        T("-24802", &[10, 2]),
        T("65840", &[10, 3]),
        T("-114358", &[10, 4]),
        T("135752", &[10, 5]),
        T("-111502", &[10, 6]),
        T("62552", &[10, 7]),
        T("-22930", &[10, 8]),
        T("4958", &[10, 9]),
        T("-480", &[10, 10]),
        T("114", &[12, 0]),
        T("-1300", &[12, 1]),
        T("6726", &[12, 2]),
        T("-20838", &[12, 3]),
        T("42948", &[12, 4]),
        T("-61824", &[12, 5]),
        T("63420", &[12, 6]),
        T("-46356", &[12, 7]),
        T("23658", &[12, 8]),
        T("-8028", &[12, 9]),
        T("1630", &[12, 10]),
        T("-150", &[12, 11]),
        T("-10", &[14, 0]),
        T("128", &[14, 1]),
        T("-750", &[14, 2]),
        T("2660", &[14, 3]),
        T("-6360", &[14, 4]),
        T("10800", &[14, 5]),
        T("-13356", &[14, 6]),
        T("12120", &[14, 7]),
        T("-8010", &[14, 8]),
        T("3760", &[14, 9]),
        T("-1190", &[14, 10]),
        T("228", &[14, 11]),
        T("-20", &[14, 12]),
    ],
    &[
        T("36", &[3, 2]),
        T("-144", &[3, 3]),
        T("216", &[3, 4]),
        T("-144", &[3, 5]),
        T("36", &[3, 6]),
        T("96", &[5, 1]),
        T("-768", &[5, 2]),
        T("2400", &[5, 3]),
        T("-3840", &[5, 4]),
        T("3360", &[5, 5]),
        T("-1536", &[5, 6]),
        T("288", &[5, 7]),
        T("64", &[7, 0]),
        T("-1008", &[7, 1]),
        T("5721", &[7, 2]),
        T("-16742", &[7, 3]),
        T("28695", &[7, 4]),
        T("-30084", &[7, 5]),
        T("19063", &[7, 6]),
        T("-6726", &[7, 7]),
        T("1017", &[7, 8]),
        T("-320", &[9, 0]),
        T("3992", &[9, 1]),
        T("-21063", &[9, 2]),
        T("62545", &[9, 3]),
        T("-116179", &[9, 4]),
        T("140805", &[9, 5]),
        T("-111797", &[9, 6]),
        T("56243", &[9, 7]),
        T("-16305", &[9, 8]),
        T("2079", &[9, 9]),
        T("672", &[11, 0]),
        T("-8148", &[11, 1]),
        T("43701", &[11, 2]),
        T("-136920", &[11, 3]),
        T("278124", &[11, 4]),
        T("-383376", &[11, 5]),
        T("363678", &[11, 6]),
        T("-234696", &[11, 7]),
        T("98700", &[11, 8]),
        T("-24444", &[11, 9]),
        T("2709", &[11, 10]),
        T("-768", &[13, 0]),
        T("9612", &[13, 1]),
        T("-54279", &[13, 2]),
        T("182691", &[13, 3]),
        T("-407484", &[13, 4]),
        T("632772", &[13, 5]),
        T("-698418", &[13, 6]),
        T("548154", &[13, 7]),
        T("-299916", &[13, 8]),
        T("108984", &[13, 9]),
        T("-23679", &[13, 10]),
        T("2331", &[13, 11]),
        T("516", &[15, 0]),
        T("-6816", &[15, 1]),
        T("41103", &[15, 2]),
        T("-149670", &[15, 3]),
        T("366615", &[15, 4]),
        T("-636552", &[15, 5]),
        T("803502", &[15, 6]),
        T("-743076", &[15, 7]),
        T("499770", &[15, 8]),
        T("-238440", &[15, 9]),
        T("76611", &[15, 10]),
        T("-14886", &[15, 11]),
        T("1323", &[15, 12]),
        T("-204", &[17, 0]),
        T("2868", &[17, 1]),
        T("-18561", &[17, 2]),
        T("73227", &[17, 3]),
        T("-196515", &[17, 4]),
        T("378873", &[17, 5]),
        T("-539946", &[17, 6]),
        T("575982", &[17, 7]),
        T("-459954", &[17, 8]),
        T("271590", &[17, 9]),
        T("-115269", &[17, 10]),
        T("33303", &[17, 11]),
        T("-5871", &[17, 12]),
        T("477", &[17, 13]),
        T("44", &[19, 0]),
        T("-660", &[19, 1]),
        T("4587", &[19, 2]),
        T("-19580", &[19, 3]),
        T("57354", &[19, 4]),
        T("-121968", &[19, 5]),
        T("194205", &[19, 6]),
        T("-235224", &[19, 7]),
        T("217800", &[19, 8]),
        T("-153428", &[19, 9]),
        T("80949", &[19, 10]),
        T("-31020", &[19, 11]),
        T("8162", &[19, 12]),
        T("-1320", &[19, 13]),
        T("99", &[19, 14]),
        T("-4", &[21, 0]),
        T("64", &[21, 1]),
        T("-477", &[21, 2]),
        T("2197", &[21, 3]),
        T("-6994", &[21, 4]),
        T("16302", &[21, 5]),
        T("-28743", &[21, 6]),
        T("39039", &[21, 7]),
        T("-41184", &[21, 8]),
        T("33748", &[21, 9]),
        T("-21307", &[21, 10]),
        T("10179", &[21, 11]),
        T("-3562", &[21, 12]),
        T("862", &[21, 13]),
        T("-129", &[21, 14]),
        T("9", &[21, 15]),
    ],
);

pub static F32: Expr = Expr::new(
    "f32",
    2,
    &[
        T("18816", &[0, 0]),
        T("-47040", &[0, 1]),
        T("50640", &[0, 2]),
        T("-28920", &[0, 3]),
        T("8580", &[0, 4]),
        T("-1038", &[0, 5]),
        T("-68992", &[2, 0]),
        T("274592", &[2, 1]),
        T("-459320", &[2, 2]),
        T("414840", &[2, 3]),
        T("-213190", &[2, 4]),
        T("58846", &[2, 5]),
        T("-6776", &[2, 6]),
        T("111456", &[4, 0]),
        T("-608032", &[4, 1]),
        T("1420556", &[4, 2]),
        T("-1842670", &[4, 3]),
        T("1432610", &[4, 4]),
        T("-666868", &[4, 5]),
        T("171806", &[4, 6]),
        T("-18858", &[4, 7]),
        T("-102240", &[6, 0]),
        T("707600", &[6, 1]),
        T("-2138130", &[6, 2]),
        T("3681840", &[6, 3]),
        T("-3948840", &[6, 4]),
        T("2698800", &[6, 5]),
        T("-1146690", &[6, 6]),
        T("276640", &[6, 7]),
        T("-28980", &[6, 8]),
        T("57160", &[8, 0]),
        T("-478700", &[8, 1]),
        T("1778380", &[8, 2]),
        T("-3844420", &[8, 3]),
        T("5326280", &[8, 4]),
        T("-4901510", &[8, 5]),
        T("2994100", &[8, 6]),
        T("-1169880", &[8, 7]),
        T("265120", &[8, 8]),
        T("-26530", &[8, 9]),
        T("-19368", &[10, 0]),
        T("190130", &[10, 1]),
        T("-838690", &[10, 2]),
        T("2188400", &[10, 3]),
        T("-3739270", &[10, 4]),
        T("4370216", &[10, 5]),
        T("-3536830", &[10, 6]),
        T("1956440", &[10, 7]),
        T("-707650", &[10, 8]),
        T("151070", &[10, 9]),
        T("-14448", &[10, 10]),
        T("3666", &[12, 0]),
        T("-41236", &[12, 1]),
        T("210630", &[12, 2]),
        T("-644790", &[12, 3]),
        T("1314180", &[12, 4]),
        T("-1872192", &[12, 5]),
        T("1902012", &[12, 6]),
        T("-1377780", &[12, 7]),
        T("697290", &[12, 8]),
        T("-234780", &[12, 9]),
        T("47326", &[12, 10]),
        T("-4326", &[12, 11]),
        T("-298", &[14, 0]),
        T("3776", &[14, 1]),
        T("-21918", &[14, 2]),
        T("77060", &[14, 3]),
        T("-182760", &[14, 4]),
        T("308016", &[14, 5]),
        T("-378252", &[14, 6]),
        T("341016", &[14, 7]),
        T("-224010", &[14, 8]),
        T("104560", &[14, 9]),
        T("-32918", &[14, 10]),
        T("6276", &[14, 11]),
        T("-548", &[14, 12]),
    ],
    &[
        T("900", &[3, 2]),
        T("-3600", &[3, 3]),
        T("5400", &[3, 4]),
        T("-3600", &[3, 5]),
        T("900", &[3, 6]),
        T("2400", &[5, 1]),
        T("-19200", &[5, 2]),
        T("60000", &[5, 3]),
        T("-96000", &[5, 4]),
        T("84000", &[5, 5]),
        T("-38400", &[5, 6]),
        T("7200", &[5, 7]),
        T("1600", &[7, 0]),
        T("-25200", &[7, 1]),
        T("143025", &[7, 2]),
        T("-418550", &[7, 3]),
        T("717375", &[7, 4]),
        T("-752100", &[7, 5]),
        T("476575", &[7, 6]),
        T("-168150", &[7, 7]),
        T("25425", &[7, 8]),
        T("-8000", &[9, 0]),
        T("99800", &[9, 1]),
        T("-526575", &[9, 2]),
        T("1563625", &[9, 3]),
        T("-2904475", &[9, 4]),
        T("3520125", &[9, 5]),
        T("-2794925", &[9, 6]),
        T("1406075", &[9, 7]),
        T("-407625", &[9, 8]),
        T("51975", &[9, 9]),
        T("16800", &[11, 0]),
        T("-203700", &[11, 1]),
        T("1092525", &[11, 2]),
        T("-3423000", &[11, 3]),
        T("6953100", &[11, 4]),
        T("-9584400", &[11, 5]),
        T("9091950", &[11, 6]),
        T("-5867400", &[11, 7]),
        T("2467500", &[11, 8]),
        T("-611100", &[11, 9]),
        T("67725", &[11, 10]),
        T("-19200", &[13, 0]),
        T("240300", &[13, 1]),
        T("-1356975", &[13, 2]),
        T("4567275", &[13, 3]),
        T("-10187100", &[13, 4]),
        T("15819300", &[13, 5]),
        T("-17460450", &[13, 6]),
        T("13703850", &[13, 7]),
        T("-7497900", &[13, 8]),
        T("2724600", &[13, 9]),
        T("-591975", &[13, 10]),
        T("58275", &[13, 11]),
        T("12900", &[15, 0]),
        T("-170400", &[15, 1]),
        T("1027575", &[15, 2]),
        T("-3741750", &[15, 3]),
        T("9165375", &[15, 4]),
        T("-15913800", &[15, 5]),
        T("20087550", &[15, 6]),
        T("-18576900", &[15, 7]),
        T("12494250", &[15, 8]),
        T("-5961000", &[15, 9]),
        T("1915275", &[15, 10]),
        T("-372150", &[15, 11]),
        T("33075", &[15, 12]),
        T("-5100", &[17, 0]),
        T("71700", &[17, 1]),
        T("-464025", &[17, 2]),
        T("1830675", &[17, 3]),
        T("-4912875", &[17, 4]),
        T("9471825", &[17, 5]),
        T("-13498650", &[17, 6]),
        T("14399550", &[17, 7]),
        T("-11498850", &[17, 8]),
        T("6789750", &[17, 9]),
        T("-2881725", &[17, 10]),
        T("832575", &[17, 11]),
        T("-146775", &[17, 12]),
        T("11925", &[17, 13]),
        T("1100", &[19, 0]),
        T("-16500", &[19, 1]),
        T("114675", &[19, 2]),
        T("-489500", &[19, 3]),
        T("1433850", &[19, 4]),
        T("-3049200", &[19, 5]),
        T("4855125", &[19, 6]),
        T("-5880600", &[19, 7]),
        T("5445000", &[19, 8]),
        T("-3835700", &[19, 9]),
        T("2023725", &[19, 10]),
        T("-775500", &[19, 11]),
        T("204050", &[19, 12]),
        T("-33000", &[19, 13]),
        T("2475", &[19, 14]),
        T("-100", &[21, 0]),
        T("1600", &[21, 1]),
        T("-11925", &[21, 2]),
        T("54925", &[21, 3]),
        T("-174850", &[21, 4]),
        T("407550", &[21, 5]),
        T("-718575", &[21, 6]),
        T("975975", &[21, 7]),
        T("-1029600", &[21, 8]),
        T("843700", &[21, 9]),
        T("-532675", &[21, 10]),
        T("254475", &[21, 11]),
        T("-89050", &[21, 12]),
        T("21550", &[21, 13]),
        T("-3225", &[21, 14]),
        T("225", &[21, 15]),
    ],
);

pub static TF1: Expr = Expr::new(
    "tf1",
    2,
    &[
        T("46", &[0, 2]),
        T("-92", &[0, 3]),
        T("-147", &[1, 0]),
        T("644", &[1, 1]),
        T("-974", &[1, 2]),
        T("500", &[1, 3]),
        T("157", &[2, 0]),
        T("-796", &[2, 1]),
        T("1390", &[2, 2]),
        T("-844", &[2, 3]),
        T("-37", &[3, 0]),
        T("284", &[3, 1]),
        T("-610", &[3, 2]),
        T("412", &[3, 3]),
        T("-5", &[4, 0]),
        T("28", &[4, 1]),
        T("-44", &[4, 2]),
        T("24", &[4, 3]),
    ],
    &[T("32", &[0, 0])],
);

pub static TF2: Expr = Expr::new(
    "tf2",
    2,
    &[
        T("4809546", &[0, 3]),
        T("-66973912", &[0, 4]),
        T("232542264", &[0, 5]),
        T("-296857152", &[0, 6]),
        T("122383808", &[0, 7]),
        T("-10739673", &[1, 1]),
        T("210466368", &[1, 2]),
        T("-1150739320", &[1, 3]),
        T("2941559440", &[1, 4]),
        T("-3964081744", &[1, 5]),
        T("2731667520", &[1, 6]),
        T("-755788800", &[1, 7]),
        T("-10739673", &[2, 0]),
        T("113792700", &[2, 1]),
        T("-698814550", &[2, 2]),
        T("2634432054", &[2, 3]),
        T("-5868722856", &[2, 4]),
        T("7511495264", &[2, 5]),
        T("-5121630144", &[2, 6]),
        T("1445370144", &[2, 7]),
        T("-54415725", &[3, 0]),
        T("590003991", &[3, 1]),
        T("-2660337034", &[3, 2]),
        T("6247441160", &[3, 3]),
        T("-7822507496", &[3, 4]),
        T("4487046528", &[3, 5]),
        T("-209872256", &[3, 6]),
        T("-595537216", &[3, 7]),
        T("73348336", &[4, 0]),
        T("-774666976", &[4, 1]),
        T("3500453032", &[4, 2]),
        T("-8642986844", &[4, 3]),
        T("12324207968", &[4, 4]),
        T("-9767308016", &[4, 5]),
        T("3622156352", &[4, 6]),
        T("-306481024", &[4, 7]),
        T("35088560", &[5, 0]),
        T("-362162434", &[5, 1]),
        T("1627176632", &[5, 2]),
        T("-4133792944", &[5, 3]),
        T("6482457744", &[5, 4]),
        T("-6378626016", &[5, 5]),
        T("3707964608", &[5, 6]),
        T("-992722432", &[5, 7]),
        T("-23893626", &[6, 0]),
        T("291471896", &[6, 1]),
        T("-1531582228", &[6, 2]),
        T("4477001836", &[6, 3]),
        T("-7840231424", &[6, 4]),
        T("8212491744", &[6, 5]),
        T("-4758397888", &[6, 6]),
        T("1174259008", &[6, 7]),
        T("-8785666", &[7, 0]),
        T("88466518", &[7, 1]),
        T("-385650252", &[7, 2]),
        T("943018128", &[7, 3]),
        T("-1405889184", &[7, 4]),
        T("1294766400", &[7, 5]),
        T("-694230976", &[7, 6]),
        T("170163328", &[7, 7]),
        T("1090696", &[8, 0]),
        T("-21759360", &[8, 1]),
        T("150235272", &[8, 2]),
        T("-524917774", &[8, 3]),
        T("1043064504", &[8, 4]),
        T("-1200715144", &[8, 5]),
        T("749006080", &[8, 6]),
        T("-196500800", &[8, 7]),
        T("765608", &[9, 0]),
        T("-10816453", &[9, 1]),
        T("62663256", &[9, 2]),
        T("-195985880", &[9, 3]),
        T("360390240", &[9, 4]),
        T("-391868752", &[9, 5]),
        T("234292736", &[9, 6]),
        T("-59618816", &[9, 7]),
        T("103643", &[10, 0]),
        T("-1356916", &[10, 1]),
        T("7384634", &[10, 2]),
        T("-21826178", &[10, 3]),
        T("38035304", &[10, 4]),
        T("-39245824", &[10, 5]),
        T("22277248", &[10, 6]),
        T("-5379936", &[10, 7]),
        T("4375", &[11, 0]),
        T("-53965", &[11, 1]),
        T("276614", &[11, 2]),
        T("-768408", &[11, 3]),
        T("1256200", &[11, 4]),
        T("-1215296", &[11, 5]),
        T("647744", &[11, 6]),
        T("-147264", &[11, 7]),
    ],
    &[T("65536", &[0, 0])],
);

pub static TF3: Expr = Expr::new(
    "tf3",
    2,
    &[
        T("36019769610510", &[0, 4]),
        T("-1148210028527940", &[0, 5]),
        T("29347443690978232", &[0, 6]),
        T("-172239847184973136", &[0, 7]),
        T("436142472944686624", &[0, 8]),
        T("-548587723061495744", &[0, 9]),
        T("333813814833598592", &[0, 10]),
        T("-76822252814797568", &[0, 11]),
        T("-34495848583875", &[1, 2]),
        T("2401692837025860", &[1, 3]),
        T("-92653192084825806", &[1, 4]),
        T("800002484562142740", &[1, 5]),
        T("-3265878011776081624", &[1, 6]),
        T("7566060190795417296", &[1, 7]),
        T("-10483969554666763808", &[1, 8]),
        T("8537562884034962624", &[1, 9]),
        T("-3703432676521278336", &[1, 10]),
        T("636432860367595264", &[1, 11]),
        T("-68991697167750", &[2, 1]),
        T("6307841010550149", &[2, 2]),
        T("-234628872726136476", &[2, 3]),
        T("2282736838777650008", &[2, 4]),
        T("-10844274491085960264", &[2, 5]),
        T("30070244258562939840", &[2, 6]),
        T("-51884984636217529824", &[2, 7]),
        T("56107853540221756544", &[2, 8]),
        T("-36413639548559476608", &[2, 9]),
        T("12528793450501480192", &[2, 10]),
        T("-1609576694340242944", &[2, 11]),
        T("-34495848583875", &[3, 0]),
        T("4808355123441240", &[3, 1]),
        T("-217056976339137102", &[3, 2]),
        T("2410836062508390076", &[3, 3]),
        T("-13115940227460477392", &[3, 4]),
        T("42240825176451903456", &[3, 5]),
        T("-86487265167019096992", &[3, 6]),
        T("114357816074574559296", &[3, 7]),
        T("-94671099561946056960", &[3, 8]),
        T("44185069813039629312", &[3, 9]),
        T("-8244430141436158976", &[3, 10]),
        T("-476827431701841920", &[3, 11]),
        T("866187180306441", &[4, 0]),
        T("-81730413144371544", &[4, 1]),
        T("1056146317659794202", &[4, 2]),
        T("-6256710707378229804", &[4, 3]),
        T("21099262689338623496", &[4, 4]),
        T("-42684876570416520592", &[4, 5]),
        T("47828049686812028608", &[4, 6]),
        T("-13062492297290578752", &[4, 7]),
        T("-41013755920542584064", &[4, 8]),
        T("61724402048317990912", &[4, 9]),
        T("-37667261089008642048", &[4, 10]),
        T("9072682532151616512", &[4, 11]),
        T("-11146213901963847", &[5, 0]),
        T("154917130048777400", &[5, 1]),
        T("-757965148352724594", &[5, 2]),
        T("719037568519433708", &[5, 3]),
        T("8918159686564953336", &[5, 4]),
        T("-49699689331240264208", &[5, 5]),
        T("135757517062893841856", &[5, 6]),
        T("-231593247169226848512", &[5, 7]),
        T("258529854609382767360", &[5, 8]),
        T("-184998793156453637120", &[5, 9]),
        T("77489378684547725312", &[5, 10]),
        T("-14516075527178184704", &[5, 11]),
        T("-3080665291005891", &[6, 0]),
        T("119826686754626672", &[6, 1]),
        T("-1366928930536656346", &[6, 2]),
        T("8152915395144045348", &[6, 3]),
        T("-30468919008987177136", &[6, 4]),
        T("77173046255160092384", &[6, 5]),
        T("-136940847245269443680", &[6, 6]),
        T("171030674909528382208", &[6, 7]),
        T("-147272761532436109312", &[6, 8]),
        T("82912994332318109184", &[6, 9]),
        T("-27240593211178059776", &[6, 10]),
        T("3900526997186206720", &[6, 11]),
        T("9114195900415897", &[7, 0]),
        T("-112510479257808136", &[7, 1]),
        T("540367923019593626", &[7, 2]),
        T("-875809054756646036", &[7, 3]),
        T("-3091219398038717488", &[7, 4]),
        T("22117574176787308960", &[7, 5]),
        T("-64865922475997604128", &[7, 6]),
        T("116261689090016374592", &[7, 7]),
        T("-135757162262003525120", &[7, 8]),
        T("101438734256395026944", &[7, 9]),
        T("-44283151548028325888", &[7, 10]),
        T("8624211222701727744", &[7, 11]),
        T("3829178058687173", &[8, 0]),
        T("-76517696209511064", &[8, 1]),
        T("699544766664324290", &[8, 2]),
        T("-3921810464122801884", &[8, 3]),
        T("14962903363760707540", &[8, 4]),
        T("-40470508114394906680", &[8, 5]),
        T("78511081056602415088", &[8, 6]),
        T("-108548481859561280352", &[8, 7]),
        T("104421922955985207616", &[8, 8]),
        T("-66450796162325796736", &[8, 9]),
        T("25169483550145788160", &[8, 10]),
        T("-4301579762651386368", &[8, 11]),
        T("-2740202277870123", &[9, 0]),
        T("35231933007603800", &[9, 1]),
        T("-189670062636941912", &[9, 2]),
        T("440440682779778500", &[9, 3]),
        T("395141784957764652", &[9, 4]),
        T("-5985290913409982024", &[9, 5]),
        T("19944861319861722448", &[9, 6]),
        T("-37689569560584848096", &[9, 7]),
        T("44904566105793175744", &[9, 8]),
        T("-33552543647421017728", &[9, 9]),
        T("14445635890860210432", &[9, 10]),
        T("-2747233900328147456", &[9, 11]),
        T("-2031963839835047", &[10, 0]),
        T("33198594962880532", &[10, 1]),
        T("-267353481272472560", &[10, 2]),
        T("1364541026143263708", &[10, 3]),
        T("-4774492730592056544", &[10, 4]),
        T("11798775223123126224", &[10, 5]),
        T("-20791304539537909088", &[10, 6]),
        T("26006812640823332416", &[10, 7]),
        T("-22612298048662390272", &[10, 8]),
        T("13035349987598203136", &[10, 9]),
        T("-4497277273238537728", &[10, 10]),
        T("706262265651251200", &[10, 11]),
        T("-163691764889881", &[11, 0]),
        T("3215850259172488", &[11, 1]),
        T("-40740153361625706", &[11, 2]),
        T("316976407019165108", &[11, 3]),
        T("-1534581210859394480", &[11, 4]),
        T("4851353668852957728", &[11, 5]),
        T("-10367135570178975456", &[11, 6]),
        T("15175875146606868672", &[11, 7]),
        T("-15067341640171589888", &[11, 8]),
        T("9738229228627410944", &[11, 9]),
        T("-3709296759748064256", &[11, 10]),
        T("633729488570701824", &[11, 11]),
        T("233547778816235", &[12, 0]),
        T("-3887937273629384", &[12, 1]),
        T("25557423142145934", &[12, 2]),
        T("-80618138093960068", &[12, 3]),
        T("82390666003125256", &[12, 4]),
        T("282618539692510768", &[12, 5]),
        T("-1290864425839804672", &[12, 6]),
        T("2509352718147087808", &[12, 7]),
        T("-2873929267448269824", &[12, 8]),
        T("2005092690041939456", &[12, 9]),
        T("-792764810427268096", &[12, 10]),
        T("136817673762006016", &[12, 11]),
        T("101131586545787", &[13, 0]),
        T("-1719128912658776", &[13, 1]),
        T("12499828242091954", &[13, 2]),
        T("-50886642020772764", &[13, 3]),
        T("125828028658979832", &[13, 4]),
        T("-186147990102604176", &[13, 5]),
        T("131827725324416384", &[13, 6]),
        T("45292988654487936", &[13, 7]),
        T("-191400153281405440", &[13, 8]),
        T("180568602396102144", &[13, 9]),
        T("-80453424606587904", &[13, 10]),
        T("14485453309792256", &[13, 11]),
        T("19483918887719", &[14, 0]),
        T("-326737009973728", &[14, 1]),
        T("2369157028586874", &[14, 2]),
        T("-9730869144832116", &[14, 3]),
        T("24710208318135024", &[14, 4]),
        T("-39037717746355232", &[14, 5]),
        T("34410105179603168", &[14, 6]),
        T("-6204248926130688", &[14, 7]),
        T("-21563524107118080", &[14, 8]),
        T("25288465789121024", &[14, 9]),
        T("-12289128892815360", &[14, 10]),
        T("2354940031587328", &[14, 11]),
        T("1986147874307", &[15, 0]),
        T("-31704772473816", &[15, 1]),
        T("214827403401246", &[15, 2]),
        T("-791756119733980", &[15, 3]),
        T("1627390728831664", &[15, 4]),
        T("-1367715484300704", &[15, 5]),
        T("-1757114628511840", &[15, 6]),
        T("6771671963842496", &[15, 7]),
        T("-9377190763839488", &[15, 8]),
        T("7172823239113216", &[15, 9]),
        T("-3005877213763584", &[15, 10]),
        T("542740539756544", &[15, 11]),
        T("97189416455", &[16, 0]),
        T("-1334455043144", &[16, 1]),
        T("6727511541654", &[16, 2]),
        T("-9369989324916", &[16, 3]),
        T("-54111756955634", &[16, 4]),
        T("329279264613084", &[16, 5]),
        T("-884913544441192", &[16, 6]),
        T("1443134621570608", &[16, 7]),
        T("-1514016925204064", &[16, 8]),
        T("1005008546500928", &[16, 9]),
        T("-386218479265152", &[16, 10]),
        T("65721545725184", &[16, 11]),
        T("1011489335", &[17, 0]),
        T("3941585480", &[17, 1]),
        T("-243182479141", &[17, 2]),
        T("2339653729960", &[17, 3]),
        T("-11645156549966", &[17, 4]),
        T("36085565634004", &[17, 5]),
        T("-74478745501112", &[17, 6]),
        T("104717456135056", &[17, 7]),
        T("-99548885500832", &[17, 8]),
        T("61425130837952", &[17, 9]),
        T("-22257893509504", &[17, 10]),
        T("3601104128768", &[17, 11]),
        T("-54073725", &[18, 0]),
        T("1428426210", &[18, 1]),
        T("-15814746165", &[18, 2]),
        T("99146226960", &[18, 3]),
        T("-396268680120", &[18, 4]),
        T("1069230907320", &[18, 5]),
        T("-1999437262560", &[18, 6]),
        T("2603251812000", &[18, 7]),
        T("-2321530642560", &[18, 8]),
        T("1354784231040", &[18, 9]),
        T("-466828704000", &[18, 10]),
        T("72092505600", &[18, 11]),
    ],
    &[T("134217728", &[0, 0])],
);

pub static KAPN: Expr = Expr::new(
    "kapn",
    2,
    &[
        T("2104881200090531352", &[1, 0]),
        T("-58630913767660198356", &[2, 0]),
        T("365758729089763817556", &[3, 0]),
        T("-1353005890097332372470", &[4, 0]),
        T("3172898299865472357660", &[5, 0]),
        T("-4748641501899313027689", &[6, 0]),
        T("4536379008677843744262", &[7, 0]),
        T("-2063653729639496063332", &[8, 0]),
        T("-845991926265373897616", &[9, 0]),
        T("3848854638191389868333", &[10, 0]),
        T("-4106839101181189996638", &[11, 0]),
        T("1077797869120164446890", &[12, 0]),
        T("806552374484503612940", &[13, 0]),
        T("-1630300109228497230369", &[14, 0]),
        T("1226489872897021980470", &[15, 0]),
        T("109543664161325840664", &[16, 0]),
        T("-766714881123795937480", &[17, 0]),
        T("282788105181178447125", &[18, 0]),
        T("246262891452996520490", &[19, 0]),
        T("-121537499193080672062", &[20, 0]),
        T("-57638777043031711252", &[21, 0]),
        T("22749592143215129389", &[22, 0]),
        T("9772808464958064482", &[23, 0]),
        T("-2240927152940620996", &[24, 0]),
        T("-1171764771207211552", &[25, 0]),
        T("87721813509906287", &[26, 0]),
        T("100244026439753366", &[27, 0]),
        T("10263855243151606", &[28, 0]),
        T("-3410711864703916", &[29, 0]),
        T("-1214782758103459", &[30, 0]),
        T("-185234034631326", &[31, 0]),
        T("-17093052680880", &[32, 0]),
        T("-1033237688608", &[33, 0]),
        T("-41360310493", &[34, 0]),
        T("-1060235958", &[35, 0]),
        T("-15806636", &[36, 0]),
        T("-104424", &[37, 0]),
    ],
    &[T("1", &[0, 0])],
);

pub static KAPD: Expr = Expr::new(
    "kapd",
    2,
    &[
        T("-2631715218685476", &[0, 0]),
        T("3814475091599076912", &[1, 0]),
        T("-118440927041560529931", &[2, 0]),
        T("691746159028922895774", &[3, 0]),
        T("-2476126155714773703294", &[4, 0]),
        T("5606696051148996416871", &[5, 0]),
        T("-8146426987531933537793", &[6, 0]),
        T("8118838419345304712896", &[7, 0]),
        T("-3831489956406538933284", &[8, 0]),
        T("-1447591488200152741791", &[9, 0]),
        T("6151475587496528241397", &[10, 0]),
        T("-7011710911652753395142", &[11, 0]),
        T("2422679013780879493454", &[12, 0]),
        T("1112696763869892676919", &[13, 0]),
        T("-2796158967212325979553", &[14, 0]),
        T("2115483758750366890388", &[15, 0]),
        T("11079676686133307176", &[16, 0]),
        T("-1139312137822506612103", &[17, 0]),
        T("585374819884899902511", &[18, 0]),
        T("309415046153421965826", &[19, 0]),
        T("-246372492634932965506", &[20, 0]),
        T("-66857275387628213603", &[21, 0]),
        T("49503457543617590261", &[22, 0]),
        T("12128022268874697944", &[23, 0]),
        T("-5694732570594415444", &[24, 0]),
        T("-1704274219197667845", &[25, 0]),
        T("344695353057908799", &[26, 0]),
        T("174416098225939254", &[27, 0]),
        T("6781705163337138", &[28, 0]),
        T("-7678410965617803", &[29, 0]),
        T("-2018820796155987", &[30, 0]),
        T("-258930573495916", &[31, 0]),
        T("-20178839743180", &[32, 0]),
        T("-994950290565", &[33, 0]),
        T("-29584573272", &[34, 0]),
        T("-429890512", &[35, 0]),
        T("-25280", &[36, 0]),
        T("54480", &[37, 0]),
    ],
    &[T("1", &[0, 0])],
);

/// Printed factorization of the witness resultant: constant and (multiplicity, coefficients low to high).
pub static R1_CONST: (&str, &str) = ("-1", "72057594037927936");
pub static R1_FACTORS: &[(u32, &[&str])] = &[
    (2, &["-1", "1"]),
    (2, &["23", "1"]),
    (2, &["-1", "2"]),
    (4, &["0", "1"]),
    (6, &["3", "1"]),
    (4, &["-7", "2", "1"]),
    (1, &["21", "-15", "6", "4"]),
    (2, &["14", "15", "16", "3"]),
    (
        1,
        &[
            "-132182987706",
            "3724806231363",
            "-32169849655725",
            "105439411571397",
            "-204505372471814",
            "135195659870885",
            "193470794940005",
            "-138237240652045",
            "80910436459484",
            "-167516634645510",
            "-213048078842242",
            "188895548702946",
            "130467748580116",
            "-64709338716470",
            "-38554634019094",
            "9292970454326",
            "6309033684670",
            "-449862701721",
            "-621513307905",
            "-48628636343",
            "31150056402",
            "9321912097",
            "1210510049",
            "88925415",
            "3784256",
            "69324",
        ],
    ),
];
