// Frozen 200-sample dataset for cross-implementation regression tests.
// x ~ N(0,1); y = 0.6 x + 0.8 e2; z = 0.5 x + 0.5 e3.
const REF_X: [f64; 200] = [0.4925260959141166, -0.8015172065713307, 0.6957891934355098, 0.04709146896416294, 0.5093829705606567, 1.3017586233082123, 1.243086737749171, 0.9285080079668361, 0.20453116924825546, 0.2749577684561719, -0.7591598810862902, -0.0236653496971966, -1.2610197475547253, 0.3330365751905977, 0.8914127309144476, 0.6474166745452342, -0.5714321891223988, -0.9317185217270911, -0.8209080464659204, -0.44191795944030604, 0.1878481646450574, 0.5367369754169568, -2.0126298002003207, 0.255320880568571, 1.022811084276041, -0.4338267368799132, 0.4729073420684403, 1.148949438387145, -0.32513959123311037, -1.0225344300206631, 1.5646947602287886, -0.7490886347325798, -1.44668679905037, -1.021355502263713, -0.7916568390523242, 0.2276207183312604, -1.4525223843830444, 0.8488874007870953, -0.5151012763926555, 0.21947819764273932, -0.029936156181220305, 1.2052429415340011, -0.26836479984063555, 1.2387054461939935, 1.5743735363805547, -1.4505619848071494, -0.4197563440069574, -0.5356140488194095, 1.3329419348724496, 1.1181601833109804, -1.4879582127560855, 0.683742433151248, 2.4460292277313926, -1.5307924929968628, -0.08238609819864574, 0.38769642878174865, 0.20250326796911988, 1.462328624683922, 1.3098254320148497, 0.9347963291284785, -0.6032751673170359, -0.49971229036694476, 1.988980314314485, -2.0265289813306326, 1.729832379249466, -0.07336592451648971, -0.8150379607742291, 1.098209281745269, -0.23242868367237748, -0.643896671026096, -0.06505178109332298, 1.0751576355028072, -0.3671597506678105, -0.30460114818033224, -0.7282284870758545, 0.1479314758724493, 0.7820308801601351, -0.29914294018269166, 0.803026480315954, 1.1521841883851809, 1.0607074890097803, -0.7039174308063579, 0.5650147406192496, -0.9736260391242431, 0.09088636344694725, -1.0925174105859683, -1.2421124333446874, -0.8567311917176677, 0.49844128930121284, -0.5059850312065893, 0.4301371463729095, 0.5669095465185426, 0.7536286406737795, 2.1569003204766837, 1.7339000995293625, 1.7849127673837992, 0.6599680660758914, 1.9777694422257397, -0.636468118641886, 0.3069689994747992, -0.3512172649286193, -1.4685876769849713, -0.33383799475680376, -1.186514121153307, -0.25172823858913784, 2.127591919784333, 0.6246717835438187, 1.4998379974435712, 0.7392475701585584, -0.4541339392290119, -0.5589294248971844, 0.21813270481466096, -1.508141076458894, 0.5223827946915057, 0.6247579929327374, 1.9241748985473455, 1.095851574461842, 2.9942611132248866, 0.13364190671862627, 0.4688787633735776, -1.4981533237192044, 0.04301909122827637, 1.0556731411222153, 0.9400477335294862, -1.2868051805042815, 0.5100718286998331, -0.050794262562983514, 1.53683966065934, -0.0024065813077449143, 1.5878181114169327, -0.940264306414688, 1.0951368636524665, -0.6050620193178349, 0.7570898489896182, 0.4424657260541194, 0.46219163584314255, -0.21357009026414941, -0.4770448911064901, -0.5559276872289007, 0.2331482292394923, 0.4902438722554406, -1.2610965540656076, -0.36729409229537135, 0.9332384155014523, -1.929280829803644, 0.04460370907267607, 0.8660755791195576, -0.8840797181841813, 0.12683316261279093, 1.345755318556423, 0.6254394983185657, 0.4048629715763172, 0.6280489747724921, -1.8561012729777198, 1.799525791387281, 0.8130538201206966, 1.1295169837147618, 1.4219639479474295, -1.612210147882996, 0.4876931606964621, 0.21011576196078244, 0.5734501949905728, -0.5413826913780049, -0.9621216763242237, 0.9384439613122182, 0.14003420054247448, 1.3642426019863263, -0.37626074941817805, -0.6056777738531292, 0.10641646028191368, -1.1119855782565446, 0.4580736408878356, 0.693189521154642, 0.5318863412097325, 0.9823999344641655, -1.2376160836246604, 0.6607533044518358, 1.0470909666959523, 1.3935984156491665, -1.1739020756026455, -0.03469414314291658, -0.7093745751386079, -2.7991642631032345, 1.2852656178185211, -1.266534838128098, 1.7982711806544676, 0.22854296612423555, -0.0006032657879199132, 0.9710922349776875, -0.05685088463624665, -0.050919087417174824, -0.23552168190174252, 0.5305665302249096, -0.4109935203687935, -0.21174301247345223, 0.2466270012913969, -1.6643784128402002, -2.481797038807029, 0.7107490399590921, 2.2228413399347056];
const REF_Y: [f64; 200] = [0.3594883753021065, -0.17411742931644514, -0.5478914999697109, -0.2503162945234565, 0.6754415567972021, -0.4867043064941392, 0.5412230633713837, 1.397989805899023, -0.35476062023391286, 0.5792549444383491, -0.1819759787211197, 0.07228512121133154, -1.9265592713243875, 0.8933020532392223, -0.6430431878676105, 0.036374820427463095, -0.013817754725547415, -1.3805325607352275, 0.0216701057623927, -1.6551094282903307, -0.49058051093946636, 0.03726820421781518, -1.2380992161298465, 0.8906211079230829, 0.78297032903657, 0.7079501000299488, 0.15124631911486905, 0.9013049200592368, 0.1940483458944317, 1.2158230991387393, 0.1915777980022293, -1.4387173946727034, -0.43749783352812105, -1.3991309961638334, -1.0439484870404327, 0.6571784447810962, -0.9969560936314347, -0.3199647504769406, -1.3464605895464532, -0.4967812019238311, 0.3402009739213156, 0.359515926784021, -1.4456000022656614, 0.6598925060376212, -0.7072640240826743, -1.2750516958359848, -0.21452541750416654, -1.306561893897512, 1.1379461333668885, 0.7451088627388723, -2.6650376709645456, 1.2303003869446831, 1.1629553813086997, -1.1894092930941418, 1.209610009429851, 0.460321180242377, -0.6658913321897361, 1.85561144218565, 1.4807890241932675, 2.269064719154785, -0.6449261910383443, 0.19378542533825127, 1.5735907121219646, -0.7957936096344418, 0.4058796112810872, -0.13892974033402528, -2.402277589420306, -0.5052082201014058, 0.8518171445384595, -0.1707527220353921, 1.1003918319033004, 1.3756504768348923, -1.8216686987906379, 0.1446120175677756, 0.5203348661084687, 0.01407051095092507, -0.725186229295167, 0.13757464187419702, 1.2086286862453681, 1.4000398793816422, 1.026554713512743, -1.4875727648354287, -1.0342890718256488, -0.195398995953609, -1.0273551666102172, -1.305715013117228, -0.8567792894879538, -1.195686995224563, -0.42327706819288446, -0.3660417256624648, 1.2184388343606645, 0.3945434277470442, -0.028803697318326327, 1.6929926066148522, 3.1460512328231487, 0.8325392825972675, 1.2981015594405962, 0.21267581631224375, -1.2620806232476325, -0.15292716032173062, -0.8541506909836795, 0.6460534298318407, -0.815728107735725, -0.17634582822487, -0.19152381391636775, 2.317906126875829, 0.21335248779778648, 1.1683662508379848, 1.2746669321530542, -0.8458998326949517, -1.577763777027624, 0.5562869945546247, 0.8396542158497231, 0.6170340240075425, 0.8146874982545584, 1.7871735044402484, 0.03898530263042421, 2.544755932969041, 0.23204964295774622, 0.6823853354653975, -0.03888252516212576, -0.37734402940228345, 0.8101010935944205, 0.018718730524596383, -1.4218022837896331, 0.14031149177348792, -0.546898183284787, 0.8582803415695648, -0.6710685724206248, 0.17312993135439336, -0.6750731689653686, 0.09750550817158543, -0.8470575597569517, 0.7349434813846751, -0.5485912936612962, 1.2265653079169168, 0.9257368708940283, -1.9875035941671149, -1.0998481350840257, 0.8069956628104616, -0.7539712407189443, 1.385068211546642, 0.41403492078157245, 0.844432388110213, -1.181270210779823, -0.4233134269397017, 0.9999527410771013, 0.043086587118133846, -0.18732886772282475, 1.063201136685596, -0.06607722633312663, -0.447227415186535, 1.0888447026518664, -0.8046576638585509, 1.7132430492311128, 1.536360207698642, -0.49287495584091723, -0.32376037259515955, -1.1090201149834704, -0.9918162691357937, 1.0638367941108786, -1.035921968528117, 0.5175974944113595, -1.273648160469612, -1.1398366225624854, -0.7920028610890274, -0.32677769896387265, -0.6205162097098758, -0.6203447072200159, -0.4671482026516453, -1.1434632918983738, 2.071979268455161, 0.1099130497015528, 0.002532304847726985, 0.30288777313320653, -0.14361409617442666, -0.4460776916162162, -0.14097854490666528, 0.550463819958646, -0.8405626840168012, -0.32905695801529805, -1.8750247927795496, -2.5696904571880594, 2.2918592370781825, -0.09917038598803984, 2.4076084060257834, 0.5338665263853835, -0.6149406126852968, 1.814501264523556, -0.2087343166242141, -0.6961876047783724, 1.416149667097886, 0.7986803237108475, -0.24107561325666735, 0.49683031380028797, 0.4913998039601844, -1.2816545713110932, -2.5224938524974365, 1.013377314371982, 0.5805871429530468];
const REF_Z: [f64; 200] = [-0.05579585871867279, -0.5789960659147892, -0.4035121382906134, 0.2753377928542091, -0.4335136839054097, 0.7452697499240969, 0.5906297983990503, 1.216665130761479, 0.20481535882240823, -0.3354709086384412, -0.8012297186613421, 0.20654608533882754, 0.02022772380640192, 0.08990611371393152, 1.3057316891830173, 0.25488910559294803, -0.6028880425998058, -0.7154093121224065, 0.09357341311469458, 0.5543443015468329, 0.09534167765188681, -0.05305251677083417, -1.4766006176122541, 0.9064986343168561, 0.21821209325984214, 0.7372846712039646, 1.0133828600962413, 0.3563259749206419, -0.8304280920223875, -1.193423665362458, 1.0639847616457394, -0.4855195182114831, -1.7945791364331962, 0.23341419174087408, -0.4300956878519408, -0.19163541864644618, -0.7201732313635689, 0.9542678973186742, -0.32787709935459247, 0.6424211550864773, -0.15204562664044066, 0.7179928119921533, -0.43199024483165244, -0.058251760689810195, 0.5862695738066298, -0.5698021515093268, 0.20650616797687527, -0.45245263675569314, 0.7930263845801712, 0.13933145530312857, -1.1955920017024433, 0.14171663812260468, 1.1261294218637707, -1.4388889769762498, 0.21793910870170946, 0.49918832363811216, 0.18477109317404894, 1.4598457659382884, 0.3717854675684973, -0.07916960831472736, -0.734270205305192, -0.44695304098634026, 1.430229384422327, -1.0745606151356368, 0.8431020069178509, -0.6034864103520258, 0.09207085064887316, 0.5491025036211545, -0.9098056665440316, -0.17207088851873822, -0.3735495521202458, 0.03485452547217549, -0.9326687485346914, 0.21078329272824342, -0.37403278361268294, -0.3777079325486819, 0.7046777138934381, -0.5098533630085857, -0.1291932224974887, 0.1786297013542853, 0.6797731422575448, -0.6952308202690678, 0.7231102496439634, -1.2780860525239077, 0.7247252807181649, -0.483546711360595, -0.6329397518605852, -0.2938724845074383, 0.3371524590236473, -0.24471431536402224, -0.030310768974428942, 0.6656318757341608, 0.346098569169226, 1.8773031430164178, 0.9816568807100683, 1.2431100022021122, 0.951853266659793, 0.7221696351799916, 0.005353264624043785, 0.8351228016920804, 0.7838837688877686, -2.0831678914477276, -0.7892533647353792, -1.095205158012739, -0.5744875597139966, 0.4867575122577724, -0.6470236452704928, 0.40710456032926545, 1.1737083312705887, 0.30483536746487555, -0.9561794848608933, 0.6673904400479835, -0.5204067428309612, 0.44002707229261273, -0.6545450260560332, 0.5687895168181492, 0.1506582451836504, 2.043620286924254, 0.6408256022463732, -0.4294828198206857, -1.35352428864726, 1.1558597726630702, 0.8297523659143127, 0.6902041934128494, -0.39463672976011754, 0.7962619271799618, -0.7784072694685311, 1.2293612274430756, -0.6706397644393414, 1.2261211433773924, -0.7525296290876553, 0.3741713416327316, -0.4290217820572932, -0.43534259446145945, 0.8989721603213846, 0.45482754100396283, -0.5324171548857031, -0.9997997997128875, 1.044030252810236, -0.12007231134599886, 0.15662463042899957, -0.7699038059982125, -0.210935544285466, 0.7568605929310657, -1.5854966649113318, -0.4864161794448768, 0.5873248252003385, -1.5724656492942546, 0.23739534020402153, 0.8915696476096929, 0.5959583493255762, 0.7076392306101771, -0.15736680273626613, -1.1015959041773367, 1.3544371502729504, 0.3977146799132179, 1.5016160341884772, 0.3933238915603919, -0.714788000495473, 0.23819127583704125, -0.43674404399068195, 0.19572738953061639, -0.1117822446946925, -0.4553854387826164, 0.9409535122930788, 0.5587427982457593, 1.457914710215802, -0.6281785204455426, -0.5665345870976658, 0.19095926974483518, -0.5915150143391482, -0.9711679209965526, -0.7350985283296161, -0.10226953669793737, 0.6059955896885066, -0.8474120839150877, -0.4758864543177594, 0.22271416723775972, 0.25346016697799156, -0.24132566911664122, 0.24045959294947886, 0.11755283289017354, -1.930190083572022, 0.5780367103340946, -0.33358446584413304, 1.589747030233378, 0.4521503127518422, 0.3640985500014835, -0.05622174978587163, 0.41047571918702375, 0.768923007195193, -0.2510400976061792, -0.0823154158164568, -1.0898064571245647, -0.41376737378491935, 0.9563030866237253, -0.2610293798879295, -0.5013379209450518, 0.31539724937427316, 1.3004801354139632];
