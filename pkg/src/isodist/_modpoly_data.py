"""Classical modular polynomial coefficient tables (generated file).

Generated by scripts/derive_modular_polynomials.py; do not edit by hand.
PHI[ell][(i, k)] is the coefficient of X^i Y^k as a decimal string, stored
for i >= k only (the polynomials are symmetric in X and Y).
"""

PHI: dict[int, dict[tuple[int, int], str]] = {
    2: {
        (3, 0): "1",
        (2, 2): "-1",
        (2, 1): "1488",
        (2, 0): "-162000",
        (1, 1): "40773375",
        (1, 0): "8748000000",
        (0, 0): "-157464000000000",
    },
    3: {
        (4, 0): "1",
        (3, 3): "-1",
        (3, 2): "2232",
        (3, 1): "-1069956",
        (3, 0): "36864000",
        (2, 2): "2587918086",
        (2, 1): "8900222976000",
        (2, 0): "452984832000000",
        (1, 1): "-770845966336000000",
        (1, 0): "1855425871872000000000",
    },
    5: {
        (6, 0): "1",
        (5, 5): "-1",
        (5, 4): "3720",
        (5, 3): "-4550940",
        (5, 2): "2028551200",
        (5, 1): "-246683410950",
        (5, 0): "1963211489280",
        (4, 4): "1665999364600",
        (4, 3): "107878928185336800",
        (4, 2): "383083609779811215375",
        (4, 1): "128541798906828816384000",
        (4, 0): "1284733132841424456253440",
        (3, 3): "-441206965512914835246100",
        (3, 2): "26898488858380731577417728000",
        (3, 1): "-192457934618928299655108231168000",
        (3, 0): "280244777828439527804321565297868800",
        (2, 2): "5110941777552418083110765199360000",
        (2, 1): "36554736583949629295706472332656640000",
        (2, 0): "6692500042627997708487149415015068467200",
        (1, 1): "-264073457076620596259715790247978782949376",
        (1, 0): "53274330803424425450420160273356509151232000",
        (0, 0): "141359947154721358697753474691071362751004672000",
    },
    7: {
        (8, 0): "1",
        (7, 7): "-1",
        (7, 6): "5208",
        (7, 5): "-10246068",
        (7, 4): "9437674400",
        (7, 3): "-4079701128594",
        (7, 2): "720168419610864",
        (7, 1): "-34993297342013192",
        (7, 0): "104545516658688000",
        (6, 6): "312598931380281",
        (6, 5): "177089350028475373552",
        (6, 4): "4460942463213898353207432",
        (6, 3): "16125487429368412743622133040",
        (6, 2): "10685207605419433304631062899228",
        (6, 1): "1038063543615451121419229773824000",
        (6, 0): "3643255017844740441130401792000000",
        (5, 5): "-18300817137706889881369818348",
        (5, 4): "14066810691825882583305340438456800",
        (5, 3): "-901645312135695263877115693740562092344",
        (5, 2): "11269804827778129625111322263056523132928000",
        (5, 1): "-40689839325168186578698294668599003971584000000",
        (5, 0): "42320664241971721884753245384947305283584000000000",
        (4, 4): "88037255060655710247136461896264828390470",
        (4, 3): "17972351380696034759035751584170427941396480000",
        (4, 2): "308718989330868920558541707287296140145328128000000",
        (4, 1): "553293497305121712634517214392820316998991872000000000",
        (4, 0): "41375720005635744770247248526572116368162816000000000000",
        (3, 3): "-5397554444336630396660447092290576395211374592000000",
        (3, 2): "72269669689202948469186346100000679630099972096000000000",
        (3, 1): "-129686683986501811181602978946723823397619367936000000000000",
        (3, 0): "13483958224762213714698012883865296529472356352000000000000000",
        (2, 2): "-46666007311089950798495647194817495401448341504000000000000",
        (2, 1): "-838538082798149465723818021032241603179964268544000000000000000",
        (2, 0): "1464765079488386840337633731737402825128271675392000000000000000000",
        (1, 1): "1221349308261453750252370983314569119494710493184000000000000000000",
    },
    11: {
        (12, 0): "1",
        (11, 11): "-1",
        (11, 10): "8184",
        (11, 9): "-28278756",
        (11, 8): "53686822816",
        (11, 7): "-61058988656490",
        (11, 6): "42570393135641712",
        (11, 5): "-17899526272883039048",
        (11, 4): "4297837238774928467520",
        (11, 3): "-529134841844639613861795",
        (11, 2): "27209811658056645815522600",
        (11, 1): "-374642006356701393515817612",
        (11, 0): "296470902355240575283200000",
        (10, 10): "1608331026427734378",
        (10, 9): "30134971854812981978547264",
        (10, 8): "12407796387712093514736413264496",
        (10, 7): "645470833566425875717489618904152240",
        (10, 6): "7848482999227584325448694633580010490867",
        (10, 5): "28890545335855949285086003898461917345026160",
        (10, 4): "35372414460361796790312007060191890803134127320",
        (10, 3): "14131378888778142661582693947549844785863493325800",
        (10, 2): "1587728122949690904187089204116332301200302760915266",
        (10, 1): "33446467926379842030532687838341039552110187929600000",
        (10, 0): "29298331981110197366602526090413106879319244800000000",
        (9, 9): "-573388748843683532691009051194955437",
        (9, 8): "24228593349948582884094197811518266845689352",
        (9, 7): "-51135193038502008150804190472844550800569441050500",
        (9, 6): "14690460927260804690751501000083244161647396386205851440",
        (9, 5): "-994774826102691960922410649494629085486856242714439003812180",
        (9, 4): "22148485195925584385790489089697473918894904664093860668378292000",
        (9, 3): "-199188452917764242987050083089364860927274115441197382331866126825820",
        (9, 2): "804436418307995738740132598166893365099468842089705900525050627891200000",
        (9, 1): "-1458178254597295207839980786768623018650234306932331393013634952069120000000",
        (9, 0): "965122546660349298406724063940884252743873633176129290337528305418240000000000",
        (8, 8): "29211180544704743418963619709378403797452606969172658",
        (8, 7): "636861023141767565580039581191818069063579259290464688398880",
        (8, 6): "987807801334019988631500819088661487281712947788833523552559299560",
        (8, 5): "208334210762751500564946204497082337222910461284651050215872586641463200",
        (8, 4): "8498500708725193890718329655230574962816784139443636591086906768989729050095",
        (8, 3): "79513247125057906492841989395207442300133781750924860449090230806481243648000000",
        (8, 2): "171790435018380416903247878610824648919543398246401012395341432490921925017600000000",
        (8, 1): "66806304467998310581793391194791115184805127528413091235284315294143736709120000000000",
        (8, 0): "1338586400912357073420399795635643400599836918986297982928179335149920452608000000000000",
        (7, 7): "-64999046469909490143435875140651300541119093852394968074094803537810",
        (7, 6): "247900233561939294388612799857476424364856251769094880288086537904279396400",
        (7, 5): "-75948585201267973403627533631138995089882647284307484579413691458563029509971992",
        (7, 4): "2973119672716212219456471881112888569835575578534065127175856819648732682854604800000",
        (7, 3): "-22093249696627933419655226823604057638897222562682635800269909178325710985117040640000000",
        (7, 2): "44681231489418997440503069818655052635806384532381152777755381649015689662976491520000000000",
        (7, 1): "-24155957253764418975307742823129586187061243620756339515602571075061236992294518784000000000000",
        (7, 0): "618840723107761889896363016885251574078635388443306832549992828319945330157158400000000000000000",
        (6, 6): "1168150167526575837857761510359647773943258089269992605255478096499695783789300124",
        (6, 5): "224080399886627495149771654692369177094059649940825305182078225594292057242702643200000",
        (6, 4): "1938738373821740121470446368665797412833082873875468530371642913339302678999680942080000000",
        (6, 3): "-7211912299746007510535159486199919697482960389278446632552985263875183091897870581760000000000",
        (6, 2): "30494044246550310117871895628421273379173050630568397072391110688366558535804457582592000000000000",
        (6, 1): "-95333447356443287210404497374050404132491763274506548619337189691919811046970438451200000000000000000",
        (6, 0): "95356266594731795079493309965756674711058734831164489212811553129058773080352804044800000000000000000000",
        (5, 5): "-15057297311708922526580514410563848478334693758624999774108600968667487260827388477440000000",
        (5, 4): "-177994641867075262695184980920462608604060357466681128822395417442867019643767352197120000000000",
        (5, 3): "-1328993907465108152135763886999825071444084099881098607565574716140191426369978927939584000000000000",
        (5, 2): "9718148718139346647384449201643833517488848029697396574289278515913329360524510494720000000000000000000",
        (5, 1): "-7840379248214196729643062796493269425081859930100141304047932909346022483171510017064960000000000000000000",
        (5, 0): "-3111357148902865912417988391836350251682805385917571877568422664218078901010004935966720000000000000000000000",
        (4, 4): "15043423165563966645618284609730360176005265392518745580151910727157028699006028388237312000000000000",
        (4, 3): "-51038778870467375317174627414281203016789153392265449880353463871004348816411677478092800000000000000000",
        (4, 2): "378494977797549959360178068152933818044335078157093771639955480261351930169113765048483840000000000000000000",
        (4, 1): "59659609577030961637541110289112021078091104767187787822549078869394205439302452893450240000000000000000000000",
        (4, 0): "43714682637171236021367604966833305309923746974850894665325331604362303109715777067941888000000000000000000000000",
        (3, 3): "-925461466455522523607980072366478440235575959511945288268604770825451300845059605937520640000000000000000000",
        (3, 2): "1038677201789914991362090465961377302769147065985487222285672689158918175716097236444119040000000000000000000000",
        (3, 1): "493751729222149651035457063068642305508233453469401395944974296438196687728770695603159040000000000000000000000000",
        (3, 0): "-337500037290942764495395868386562971754016116785390841072048221617443316658082155384012800000000000000000000000000000",
        (2, 2): "-301851634381591833346238394387907563828793379391119445614595161272769455527698270716428288000000000000000000000000",
        (2, 1): "-4175190947377089941611452135383204997172948465221368432119554418845446929655566146994176000000000000000000000000000000",
        (2, 0): "1509199706449264373105244249368970977209959173066491449939153900434037998316228131684352000000000000000000000000000000000",
        (1, 1): "6950986496704390042399105433049126860396103535300642728895074819467726754375236055025582080000000000000000000000000000000",
        (1, 0): "-3708476896661234261166595138586620846782660237574536888784393380944856551532392652692520960000000000000000000000000000000000",
        (0, 0): "3924233450945276549086964624087200490995247233706746270899364206426701740619416867392454656000000000000000000000000000000000000",
    },
    13: {
        (14, 0): "1",
        (13, 13): "-1",
        (13, 12): "9672",
        (13, 11): "-40616316",
        (13, 10): "97116140576",
        (13, 9): "-145742356534710",
        (13, 8): "142727120530755696",
        (13, 7): "-91944131414745883208",
        (13, 6): "38373375189621696878784",
        (13, 5): "-9980376107988974265288009",
        (13, 4): "1508484527780717514871680200",
        (13, 3): "-117589277940072151921466095740",
        (13, 2): "3813066975450671721121304807712",
        (13, 1): "-32685702714621175092948209889806",
        (13, 0): "15787756016985099663979167744000",
        (12, 12): "63336131453282305176",
        (12, 11): "5339704017492387472276862944",
        (12, 10): "7038227861570702862399825051262104",
        (12, 9): "1017131468961830048705766611220442641072",
        (12, 8): "32988905472599070890328795217808043240900816",
        (12, 7): "333551826778342195432371586876023049547129080896",
        (12, 6): "1234257162452453722866237618078783279952599399679176",
        (12, 5): "1787206767475651398304042906319887696372425891847417480",
        (12, 4): "1010922460622081033367079280521141037085193349093095277208",
        (12, 3): "207577177886168263601723424708043354620195244558620874018272",
        (12, 2): "12893770087100209197778927627416397147602669299324665034127451",
        (12, 1): "157870586217596053304332218736965888119051656824626442141696000",
        (12, 0): "83084413350616406183495875982586495825900375128760385536000000",
        (11, 11): "-936062849021824119784660671862200161988",
        (11, 10): "214191411057420328765018422101187988893741675744",
        (11, 9): "-1967575998834670421411906070499119710120923910594022072",
        (11, 8): "2117324199178304244393290847066787694415213468957410146838208",
        (11, 7): "-481806591005250661668209263946913789583739163176277250633369496316",
        (11, 6): "33157532644992168541479115114277423707920632043639237944990254217082784",
        (11, 5): "-874174690463455858478740034973677797874649720724911207202908349653368101836",
        (11, 4): "10335702376336052876569385632176208762756384874046214470799722804104208232161120",
        (11, 3): "-60259084880308652560754125957376955923094701831235097378932424092592846288059835756",
        (11, 2): "179312619437995268862785568892538140587316635932472934686318597956817819648897662976000",
        (11, 1): "-260241334661897724169148477062778090370575619826743149104887568856318553170833833984000000",
        (11, 0): "145746271865985701303006968690727073623110154189151557978520314340489760352149438464000000000",
        (10, 10): "2303156526339236416244981158503557124969923397655602595936",
        (10, 9): "333376714930461597630366410672145363642373801348744230962709165120",
        (10, 8): "2965269806029300518982153645576999878343315273199400249881587616072766840",
        (10, 7): "3319074015126775003340627498451966608621776985617068464040481273875824853713440",
        (10, 6): "707602306954335961264387747392830714609124951294341249227988393380722334150416923424",
        (10, 5): "36877562398966114743254895852508154513817343754571889820596205093997469123113726984508320",
        (10, 4): "539434066952838633601058314080351829728768185613881497302494155281483862817525900116623514601",
        (10, 3): "2308916580373705363546321120346521865137649088713708960950564814885950596793631208268755124224000",
        (10, 2): "2678665736689769049900018109140598264035750069305308244518131035743577819824227828206936260608000000",
        (10, 1): "618365025729687208026621844082518672586866478732183940869747889968364543178129991952544825344000000000",
        (10, 0): "7605348735017212625875837184978457615081634815943367015020891775626681233374752203029348352000000000000",
        (9, 9): "-344642844610887365333843812260789022299828714507153260278660403308943561718",
        (9, 8): "11510485988607799847944664306226745280653016997751179971212105953518910829665118960",
        (9, 7): "-28971833722004769608218351898602997023873718918496584569542741468721604925350565276800952",
        (9, 6): "8968707059877929793953816639999625053085656781146444057912686388706404082753228694260847129920",
        (9, 5): "-474980656775733704222417133934306465523573652393831168608700490473956434788522583600537536840594898",
        (9, 4): "5716677920985743655201500120101677007190102608912515081206876829642793929337037298192242022307430400000",
        (9, 3): "-20678078537212882761694153848026684161510425619867392882628417971589808513139875419201055859633291264000000",
        (9, 2): "25872463908449289016750628555567372710185328848483463083494077182570444339188517407317465229936295936000000000",
        (9, 1): "-8674072694766581259832161984558424258242345509461562068916284333261672299485935075259027823494430720000000000000",
        (9, 0): "132287948592242819730686388197721726586421046648941198415164132202495387061267918873489002706501632000000000000000",
        (8, 8): "763629377534280239525001752797018342037897631130969295340196615666330614048031692849601680",
        (8, 7): "2155218753344782821853617766133779473725138989326106677408530224250256987904613455196577522696384",
        (8, 6): "415431723402642702720731130934926941857797474097020970018619513668017459051573659373309870938643397563",
        (8, 5): "5757558921048446015266554919402344737333501100152974630225108131920384126722107536788649181513676013568000",
        (8, 4): "-6095414391440954795178869663499425828291538452766653566256327921063584062137305104052711687223009869824000000",
        (8, 3): "-62333021735677560171642749900635564915892941745383692317263013992372210489562891779314959788281383878656000000000",
        (8, 2): "367699880302507769522184906338576349930282889799687609612600740135262931410546189503475085055061919793152000000000000",
        (8, 1): "-913844005726821508929480521086904504761295550807304466343649705885472617699094229816628221421776732684288000000000000000",
        (8, 0): "767013621315952423931475176267170123577142608595930709148835175130350223089832292329376203694232005771264000000000000000000",
        (7, 7): "-3539294606963747267479265746594748156709881306171284362655032102198235369837795589356541679185977279848",
        (7, 6): "187433051934148497537178792064160144226449743146562769523813325806108271927829978476604969216803944169472000",
        (7, 5): "-3702665127143760979998154278812085426166716114551745045128607584536820099329002243268464660519705479479296000000",
        (7, 4): "-18313220589707554303919628836565371160582541687979396960418053123247399413186658869150749995799620001726464000000000",
        (7, 3): "303628396849623247388501617704769126069627806954925724909207701265590212162332663163323999037945093480775680000000000000",
        (7, 2): "-226668496996199203777352229716417461096995804909768763297196647245168959821482189931394270493086737753964544000000000000000",
        (7, 1): "-465337020884877935874185748520218965445631193822519111113045800260798180133962179115662432186399226106740736000000000000000000",
        (7, 0): "66829334150181693395733549605487911633242059793148257435222656254771339933627547003847032182942337299644416000000000000000000000",
        (6, 6): "21919503989502556482532977985659185423685666886088290313930781118854798926106308297736210617657464845238272000000",
        (6, 5): "-1410473999113376096921325206927033932443299808279922080543730137710923836158828899053966820213587545583255552000000000",
        (6, 4): "17722361050304472620163034691211680403065699682566045788144444570455590725483253301914282961928612252886237184000000000000",
        (6, 3): "-17733806301048501011486217516580565338695560468655559232106708808776991496975958558628543386809658957681917952000000000000000",
        (6, 2): "175801761541721296614163144760797961999581545737966242399898402245904424096892942484369837626392492960431210496000000000000000000",
        (6, 1): "34208636313948962505255416382800378890590483698550917680568729071142350960549152337412536609529405160000847872000000000000000000000",
        (6, 0): "3268240030696916778423724456839641770009309037438345492166218927315814548015978322807870290034191070539022336000000000000000000000000",
        (5, 5): "5627576194161215810088198676115700033241050131121473877965970475637724125302025889733550246015725064794669056000000000000",
        (5, 4): "828973674649555922651050874150305990627094598448649047796953362599591050742151260055665892525003926982843432960000000000000000",
        (5, 3): "-941802378462465511244447050809161114536892868345640328360842000821724559505492381497133977607854427475915309056000000000000000000",
        (5, 2): "-5648591949659254685659692003344338379638954758557151198844390691020983772484333009507611037427149946420681768960000000000000000000000",
        (5, 1): "1617796325733693961426612991967106010346218233891170279500742895526209242404102299051177796077528512644260036608000000000000000000000000",
        (5, 0): "95888722830042559821615002218841595211920062873311035820055532712656384110985948315484610123352758708871364608000000000000000000000000000",
        (4, 4): "4081674117329728804489206772464831122415122070151308117835102044725072517715001683094459791402673386965744746496000000000000000000",
        (4, 3): "-24885848452127894014624454936412695642180132782686131038890849143846266810389567025962091921161996214123131568128000000000000000000000",
        (4, 2): "58405353917014162404952148388731205467622015248477898593099624781969985828433123084038663979821981572463218130944000000000000000000000000",
        (4, 1): "-4772454395099970588376889812892387899584728241524331459452038527296029061412099051047499510623295031345026170880000000000000000000000000000",
        (4, 0): "1885223597142817735215521923030446116923320678716240056759672332116990135924145606946025364033903751052868452352000000000000000000000000000000",
        (3, 3): "-4983534780898623837208148120899538170442693994917976285662769716226848993219053110271292940660067899070381817856000000000000000000000000",
        (3, 2): "60459932962707148685750780439295720777105469153376987257360608129644675668266607620124314344109550426506206904320000000000000000000000000000",
        (3, 1): "-185232507560749354757488264428490031076630581809117895374513401195331750782161966573976898709883093065359517810688000000000000000000000000000000",
        (3, 0): "22236398027215399937779019690353966999876882002081199329677306063131993047041542443852802352851578390365960404992000000000000000000000000000000000",
        (2, 2): "26281453854686565480854489645262487309390226496990889730097271768767754182467308700379350639320763133343165317120000000000000000000000000000000",
        (2, 1): "-37066027755072565194081927511328660876696510055655033788696425898925604370808677258232777955584843608603884519424000000000000000000000000000000000",
        (2, 0): "147213371414156573713539483874043827500390696883068187579053600467101994104225901089258359895920442702174699388928000000000000000000000000000000000000",
        (1, 1): "-33905309938808933226695939390198532869912468194279700917160273935527359588865865248595689625551089671051614879744000000000000000000000000000000000000",
    },
    17: {
        (18, 0): "1",
        (17, 17): "-1",
        (17, 16): "12648",
        (17, 15): "-71933868",
        (17, 14): "243057494560",
        (17, 13): "-543107538085134",
        (17, 12): "845403773043689712",
        (17, 11): "-940834526805431190536",
        (17, 10): "756269550836626353971136",
        (17, 9): "-438493979066274155797170885",
        (17, 8): "181258419993507714348169154760",
        (17, 7): "-52223043610467843989294551790844",
        (17, 6): "10116910271467186525015468031585952",
        (17, 5): "-1248215296266475245333926664747624142",
        (17, 4): "90336587393075838765443533218971103600",
        (17, 3): "-3367271883828654344450602714413581988552",
        (17, 2): "51640192300469514986068567579715308330944",
        (17, 1): "-205268640098051056539848762369487648144402",
        (17, 0): "44771028181385452801142987974975193088000",
        (16, 16): "45268321023563019195816",
        (16, 15): "56433132181274077348307560338912",
        (16, 14): "590680765405050150988349309107207619916",
        (16, 13): "504014727972394450311510687861881897603860336",
        (16, 12): "83640338267620703446176135587067446162072729161104",
        (16, 11): "4131257466208958565665792027885370531285156717507804480",
        (16, 10): "76742426511222732530304277120403149719561214584114717116469",
        (16, 9): "614068256620013324189278067511564998082385714189064062291128504",
        (16, 8): "2288223806521122920681979560560862127259497984787834649886392272416",
        (16, 7): "4128723330499913828358434470147585081807836456946136192323582961445472",
        (16, 6): "3635992601574290668568260243221818468770884852303590236423100945685806136",
        (16, 5): "1528729600207617900247410946944045994641440479775991468922656907730790183216",
        (16, 4): "289547963693326301934636868157211077840629183403730838996639384120753245726576",
        (16, 3): "22101336619747593955508531302384988092379623211124712259686137049053689452864320",
        (16, 2): "551351367040307715403041819642881213795834321840986390344793975786913267615662233",
        (16, 1): "2869380259303305752665726683219345430182200931908432539271568475244105174482944000",
        (16, 0): "668148321472803468401994928148347860947764805367113104414357546279297351680000000",
        (15, 15): "-514439740025263280711232820787012638427550908",
        (15, 14): "2346502378663082806457928904372003843215534612677260704",
        (15, 13): "-290040956713566783917299583360052668780120420569637024074997688",
        (15, 12): "3191683477367870258462424857623073876997867993673025266727874228053952",
        (15, 11): "-6146059167345383825777754960094717527208565900344813692179106931743686392794",
        (15, 10): "3091207587983678784185303905221997849147564797948776229151040553435198605641203888",
        (15, 9): "-529413231224687026355563282041515529027236635242612149141425793052987814451463757498380",
        (15, 8): "37235833390124041243839631189918599612868215804065778651598343585891375025545246325058744800",
        (15, 7): "-1233578701291430507481881297596122671372094996549740286737288579505992102319624159264455322542268",
        (15, 6): "21283971796051417411139419515907095389691165033877492425409890186028699597154969346752421729827644576",
        (15, 5): "-205248931601665030546848510328077804936530659086776402082783404977971908666899239544278739110178863072024",
        (15, 4): "1155442254780236129613291389390393255252896809689371591508216263229050208378575201546348182271201151675256000",
        (15, 3): "-3856489974206308611304064614290553763899742354554034413436458900697503322774287255397161546112938678639984878384",
        (15, 2): "7479397422487021698297599746521890448565721868163047445895716786717683141374721125644256661801523948571770257408000",
        (15, 1): "-7760895445024592991803674090386706084802144628071070253675415445477067947707231948167628108994824217032537407488000000",
        (15, 0): "3323743036667141238998992881020740173983534115801298151533273226034685026021601636349764157264473238515136593920000000000",
        (14, 14): "1193394679493621912483080891752063590190598681589675997844979612768",
        (14, 13): "4665984191876853492108115742924085058394661237241490856820668553655074765632",
        (14, 12): "839638978214792026096314023397171584709872600169448688805259917488796919291126968795",
        (14, 11): "15799194957652072490236806656442802673119851606937263926758152995790595471523056631116329424",
        (14, 10): "50650994035197461802722668179408564896047209775335105869568865326070268830279262158611087028129536",
        (14, 9): "37931502953219105010152656408583239618737268962771481659545043844002351397140014595049115745123172084512",
        (14, 8): "8208063020508014917026389326256757084182196573331591060674251743679402473693878525849744282447241387642147928",
        (14, 7): "592948511749970354860487327362029727973875315945262813457769696608089532684258484028563610045916709330508922594720",
        (14, 6): "15700601876765017629572153058872377470579357381141286060564919327916299752978405979014840173241681675265440068543018336",
        (14, 5): "160183014567187290795941574884492239162730539054025957790121381831543792893973365766951360354113825444800352416984723956800",
        (14, 4): "633209819507206032948871232693536813726741946354436598273873964137316709682748417416972730050544636943424892908838762584476660",
        (14, 3): "921820602725385323603948357218857048580094356011445959264656829483230166497443805897433538630178896230971334185503413149859840000",
        (14, 2): "427541286068153315354168762606723330305453283766919256831537603742778497328175382076489014253749507755038527952396104335622144000000",
        (14, 1): "43789100477316303667577356454242626988689366643332176688597148608712841431099413908879555067399739316049409694575298227470336000000000",
        (14, 0): "245493849282054903582871283717436369880128101744287253184176476258278370011132257430628050486221083586073914130998155542528000000000000",
        (13, 13): "-260609750701610762878188273171026263308021538882666868268339516198256503798141337855714",
        (13, 12): "341794985535187419817441376350382644371205721732102718577673497394371688991385153115279246969856",
        (13, 11): "-28387497711035772286341947218995487054660751926125675490874270501008408374107660172291944877654739216632",
        (13, 10): "264309724335807165195482013586132307727421202042540144629307768193116433745970809433534195108924207231578910784",
        (13, 9): "-398122053632084502196802599903438971335901251593351700373148321743732448251499969006833815391688031286309647944434642",
        (13, 8): "125029667688646273972138460079855535567690241977676345156966379368218507008272877409307793349323297093518189160231560765520",
        (13, 7): "-9922540759518282656688449800121049746731058348045974853200003594179032686341077309642821784946764834616701683862628033958833672",
        (13, 6): "235570833139357631223027144434407646047922978677261196535939137581890446024758774453412410330798447063437017927095390043554173616320",
        (13, 5): "-1977868096695001399891500209337443448652590260834609861997923146354625568828931052544427289306593262056513509417261400417866599158624632",
        (13, 4): "6794612144819422257023607377961342909856254173695813951867587308168165482619770526626236973456071307762896531492592005860755686421463040000",
        (13, 3): "-10150682807934099101624460282808514343939198248069730107593617934037481683511985738209553241846456580358094048877893063637483999719325696000000",
        (13, 2): "6018384833084777212503351453385280326905632283115053868999657332312897010273669959562385361291687794408411388500425124909503827230588928000000000",
        (13, 1): "-908211786869389901023189268422036047759604054478727584450057517807501338210285087833166350120739836405901720429182577478631563032788992000000000000",
        (13, 0): "6044112210246261420701822144337698371047774028967962853733344088416022598223290820006634336051680071889790062608505043580152176443392000000000000000",
        (12, 12): "1779631056965042423204091712204630145885338956811483694275359578782423513694449347576744295188856962294208",
        (12, 11): "351785319140791095306474222679383382584810671040932454969106176942045033134645959031679611334786693766724161968576",
        (12, 10): "4951301800803861019254241961360112341189901323885111456542260626418465204743910189812919876387728141893751829008769152880",
        (12, 9): "7298926762106520663744672519865232392553736496375820119919434481602146901962616663576565473637617296661614923130854413624565520",
        (12, 8): "1412706796438791315579819591850891276336245213468079015108728260763746262077586539418441837068169009770098543419045086120367441983376",
        (12, 7): "37187416787214532986509769672694521537991969761757587079870693115006569330954464153941209971093059253395130186766216963723039423773383232",
        (12, 6): "39669325660731915144723194862300456796660825674005821237046035820100009476700353835671569849861105294262938655747332173306354825067026204804",
        (12, 5): "-447855451319220253957923133083676068684202348417589006484421919649024375571082407284416266157044966687577845179476705036887084916500176470016000",
        (12, 4): "1867016995578330711429449539543579531219126782704986862105819918870428524768786353926414383601597344269615067989005729756315977466768873488384000000",
        (12, 3): "-12029389216287966194483635239758192410071997801579638451320533742816678200188133177608324669530564858168956470316409677682524272867612538437632000000000",
        (12, 2): "44670938275546722232659033723935677630732793444228132520464039164749485422314731572213824802956562060075737549071549048536899952498863985655808000000000000",
        (12, 1): "-77211359086370035306557012740293725068362847185860622784869539791563784636986953353140389953398052631577065197759655728936931050119945141616640000000000000000",
        (12, 0): "49602446454139559851605551201140272955070820706542984795891960349650564964889335350473424671644910216983993662672324074770326910548421518557184000000000000000000",
        (11, 11): "-96413386314528259674344335382385006058443060413023454479649098047227066608444040520570410323923610409613120481027161160008",
        (11, 10): "1125895210740372173090726432959420336488203132269520447553573224471149258534584120088526391503969057334516757572367262054104339392",
        (11, 9): "-821042272231645640099735257753536736829831556450057588512069870787432184698197723536520513676318723708615691792521525039520135234673688",
        (11, 8): "46912103187427711384179013468642116088297980130488308869633807474008211755782394074007852006884408814190523530286181138923037014860612232640",
        (11, 7): "-624410377325359660174668322258867687501431588825487179064018652225326927966429809328745387906008122165352928497880972662381695552075409227897936",
        (11, 6): "1274178021928836205487790349928659015272006123036720987118610016484894709961243844045309816710052731122369632262693338911410590539353848537055232000",
        (11, 5): "158611259485495810909419253736937897151013568578274213456002625735605937065138165405864501497192624615889292585898386791870388127122214798063828992000000",
        (11, 4): "-10822013408603805550925503540474635898649909342564828645053126456934701140477974419984298339685016912133723792674124946476744982620334123368054784000000000",
        (11, 3): "-2340533069041767606059031683951198948529462329051059918390167113657796770726551957738006991766258491282407509074834770697091281159144930636074057728000000000000",
        (11, 2): "3102771640957406213047255235163233562268336251236018614627306062531437051220488661427279860858437536140891089296213796068752196092427196593512382464000000000000000",
        (11, 1): "277411780596412134458585341253478099149409543231357125164414438836973265844831460435041203925902712798535655639773499703851918757412922457927450624000000000000000000",
        (11, 0): "-147136985073446374259620768605198828884698393776717783299296424359572487062728183459383438753981499828690583347208512680142050837350431469820968960000000000000000000000",
        (10, 10): "5836755325705057985724873204762161933383344661981582404174951728629469006643705295443358732970683344077775433393441156750305037525407552",
        (10, 9): "668667167088607593622196241273370460164664657748783744910614785636930746818799746953392460338779633767361977114942662713190266969807315028800",
        (10, 8): "149601565394445880606399709707269555762108445340261232100808815192117297417765813350284342318184346287581848430160705288348842096307247288998341358",
        (10, 7): "-12445763292316504649723657061499663446511291168750181383846465122320113446365974942860388571550877427944661973525999137399814397413497136609853341696000",
        (10, 6): "313477718372580399229473060262426138640009212038915795917724738435749017222995671825739037319344744669876133973020714131405991738868268670379280564224000000",
        (10, 5): "-2153169437371220619245431961040695251538417592678684441094120345194748041193454423718753935438219035074327957777696463842443093329649225027132388802560000000000",
        (10, 4): "12631106994533432663110637783142869277311626243100303909808211820014859451187712281618723276238562103986725339340992483369894334283462856524833610530816000000000000",
        (10, 3): "3033849954465722835674719410046250757553031232140160604198122117563121928712201247177290725506553190722928517507880622872875826401299049468803357343744000000000000000",
        (10, 2): "27827616502580585025494131663125050588673037339203641888661680382052590443864432741533395328494772167948178623013394952171248703672956683929612485394432000000000000000000",
        (10, 1): "1891145960151738242273427851286615253328652810351347809271768346324297980300816745426091785021656823068926475921032245723359671267738969728372606763008000000000000000000000",
        (10, 0): "190212077793983904130736929819163049801961891633612728370585620669702986380198047759874667589974167999019060254135638489782834112073307982211011575808000000000000000000000000",
        (9, 9): "-1048253299238619396361691544454468486383641002462891521196812918660067482249125484500760414738206030176625861598325810573739739027773058187511539180",
        (9, 8): "-126142209896282330135844901683977945793459487086713866118772736889627551089649054379447595208665075492164084522668558776652889396698663666418039685120000",
        (9, 7): "1016043337978865314119845924036975427692925909628974757333536454141551983335352334072463290115824555888435482925303201206471652536302160787618165424128000000",
        (9, 6): "128920500333084240668945875288766915124278087241066645353628895384830293503710006058378681846902311023106229347712241896819826261924095060670368240893952000000000",
        (9, 5): "2281145952219130508295536029328317176474522490397759578551353291196819797617984303221041647846453967855200961082823079392847467994306833337422904844877824000000000000",
        (9, 4): "-14904845226694298413260621870448568498329529131217002856591536606236661314698771464826156162233643037395632191395043509085203132694711081981234541592838144000000000000000",
        (9, 3): "115034645623697137532555259890923142142241200274550624740375163876755755927107591745084529563549623867899684783454005619724210994149944063867055872409600000000000000000000",
        (9, 2): "23750782487143407462543470978510080575400192646224866102806126492202818271525284891560468722251208630941528371916613761023864596950122602792275156718845952000000000000000000000",
        (9, 1): "-1626853092117999200277624022536590485803200789405605330066788355468839193582578367103792930789196467582590932051220584276263558190199380149298786440577024000000000000000000000000",
        (9, 0): "-136357091392128360074882503770749973535051779389221020568912273211587413105850067566301231073804804570082555308146540824103513112677776712189912643796992000000000000000000000000000",
        (8, 8): "38862393104752255182411982035883272993283944161840873394262710724156663087405472244189673310468084730539156386083028133471320370558747094149175346987008000000",
        (8, 7): "4310388923412084154932357681160257762028531400602250529152683411983016885993708660593990788269541058391466562095430968192018066872400042724311264705642496000000000",
        (8, 6): "81079952394663435515105818478639224868942277616093653083177336466651165981371255362834595146345148732493310569067035708923564977543804811223194334784389120000000000000",
        (8, 5): "-70472521598339858182119737110582779831257196723464682926083266337975368406550288524338961311489641697138717660011888549485432043561138744986094463872925696000000000000000",
        (8, 4): "1284989887227458819893307836920717748607327364982057656441578106983971610746523607135696295058552356206730560536499460297384207137919038784219570073109528576000000000000000000",
        (8, 3): "-4564888994874967111262697172341970540480526056468473504367745354178509307067021929789824858445269358578531577241375992986465234731262554762189697668406575104000000000000000000000",
        (8, 2): "4109791572083392995356378805138176445517884749091561233637016580006837594528237566465684374138879602777050954877883545143148304584529660533477913121077067776000000000000000000000000",
        (8, 1): "-3948218072956495526400064192012744745683978082866134755595316185741213246182222762672539820499296832703398621958966964797730632573617915147581263341158400000000000000000000000000000",
        (8, 0): "57086679166006162093389741982886895323056521344319307312400322525325460763667487624295286077784504205421464401984284676667033972522670779773107485961879552000000000000000000000000000000",
        (7, 7): "45744515385242115160911415763216532551195941304575530449529385080952223472868599807359737700285909602859889543289454726257862047361364229376107187678478336000000000000",
        (7, 6): "-4211975040020686543057330375984077272593740732846831152763721958447651854335306423580554908781238566270983692877110185588736405257851612161552994224205463552000000000000000",
        (7, 5): "7754587967548542168070728345383094217152052730306957456677577110164813887651908641946397103268795625636206030172030020446511907525098569468733406279028965376000000000000000000",
        (7, 4): "19768386705959824892329571079218393316044285923949784185512196032335677164903968281959494638960956157525658476379602458722103999839477744649489549677670957056000000000000000000000",
        (7, 3): "-16814657601610841421315498734319443126843265653906794832860928985188002707783368440266653729449420080513167325161561318919138551865490170217982153791547375616000000000000000000000000",
        (7, 2): "-118072569283651647089498035217402505692192153391422756732995889702634278283604616961314758317022281493903540912483370708308907814573025587798084424047142109184000000000000000000000000000",
        (7, 1): "131352173359489656621823598374380825432499567750642538067836647961382083868598575673048099452073876834859053041926958781435102354096142527050924200362248241152000000000000000000000000000000",
        (7, 0): "-13224704996320262527578187503732007684704734156226381134593887539297807800685574875787613921199635654515291502005522646370144215437377529219985077794274017280000000000000000000000000000000000",
        (6, 6): "82675373631868921591359719821910864392004573438533193893917995967100709359330956101904702716690222561609133294431090213189242155190914421087924154182907461632000000000000000000",
        (6, 5): "-374590665835843261811674367796425998928324740015228066637403858547506281088089248031908329745067176092744282776751352581684220230619447473996851752014723416064000000000000000000000",
        (6, 4): "537471751044858292373652031521061824043047413864001391441137144711889987656805199892941536741055423837178928548878813803056492912137226707717904759814914834432000000000000000000000000",
        (6, 3): "590092317225177646237433967198185020375308984142480717904076025428632964204218896901051467414854029489396723423065209968438062427472697397781179263569358749696000000000000000000000000000",
        (6, 2): "-961552804322587839354308919930294462148484548469945529915268233738328732908865763545276571521404377080913516421107659346900543409337157464603428989381495488512000000000000000000000000000000",
        (6, 1): "-1282519063547511486457192065253440526641535039583272751962681219088937183603795512937872258791613212607480219202653245461461064852638933705629171975063257219072000000000000000000000000000000000",
        (6, 0): "1321389606723250832117937234838329768332715461434914441709989478970470176152966514080009709241729655104118070852322928181036889343116235695507147205856970407936000000000000000000000000000000000000",
        (5, 5): "3270319757238533741212386918261091500479037561101850063432178639143483964069189008968014167287025610888577368809694495984025558897865144507303963863642410057728000000000000000000000000",
        (5, 4): "-12016563126937116318374687981463025990413255848166093033040632071369182605018576606748076208269560946236887981236418284728446212643473849405747032692445000237056000000000000000000000000000",
        (5, 3): "11024027198715741610522304156022238164004101381060835496428351760379470207391094149512549345161712399715042447536050974382952346385938802362638352102713129435136000000000000000000000000000000",
        (5, 2): "15946631944658533012940802608303159478392388836692244748741797524412980729899364870000408325289050417076404008021860752541092124075485036296798435379855027601408000000000000000000000000000000000",
        (5, 1): "-21396661861531227077049914851921529917315650142345857510506895590384476858355974462336546848409873050113567899082893730463096081938240590660766571360754058919936000000000000000000000000000000000000",
        (5, 0): "3857075299930886658299338158825513606161972357446899514244992810519365265274074218043069591950006137378650968508160981392511728255070246067287704016299587796992000000000000000000000000000000000000000",
        (4, 4): "80936411413247190579512597615545911440235952973547340707955015830633127505865090939861908672236797336657502833342937470719922778408604342559642498252913841799168000000000000000000000000000000",
        (4, 3): "-176006246978227256481555743931349051421578634281369842513203050547165576645921270018667695836098831446255905198339255923375888774129420097157831959634220467355648000000000000000000000000000000000",
        (4, 2): "97649002351737538536956847926116469626463278436925792672887673222606431252831691205492896308944167944782159785297096022316511707411564820854488004175372516065280000000000000000000000000000000000000",
        (4, 1): "41432849259609475568130168922173018106038703181793533572428412432699076410787760284649523877559735440190592826723621863613870444320031740047323979522690244411392000000000000000000000000000000000000000",
        (4, 0): "5700803081816887702642342320887600715260853896386024857666100784813156937465955635848720873873754081607668823868116831406166112724855607971953472014405569871872000000000000000000000000000000000000000000",
        (3, 3): "537676888341647374331809878002902749451161558627502027156782045559356086371739340576133217266973482551348837074834290983809867562180357475195587766654429751672832000000000000000000000000000000000000",
        (3, 2): "-492693920777181761683979155663999237195092319358216060778479432721606241382559704736622426714655080229076365394015108104434505959133024191540958254069202162810880000000000000000000000000000000000000000",
        (3, 1): "32307381245480688981062551477746295813624899236381017925603604366620221750387115301417356624526114297538697040929093215499755181948471996036097942765585272143872000000000000000000000000000000000000000000",
        (3, 0): "5002234951167744456992543113123695788957661929598278950835417497165448421698087033875199958828218000184729929951889502377126547875558711912980077054013315481600000000000000000000000000000000000000000000000",
        (2, 2): "483335837614562073237706970859221176139087133309204649530314862672924683491051714167635007091696213804293862414021891369962154224199494459168387204357983135858688000000000000000000000000000000000000000000",
        (2, 1): "-47939918666212576307576300231677421162857212125090631146282253608308619052282772627789147146509134677268645852632298260710135858527363360556560347739850406887424000000000000000000000000000000000000000000000",
        (2, 0): "2803931022848209090040552503831912598117673655086271650983593541743242937315101792067190642901425693162170678981992045283522362553754800598366688223557876449280000000000000000000000000000000000000000000000000",
        (1, 1): "-17441686029009212175318851166827481860769685516544792640504987240748359475259209554213835616268455283984486896808031872898804939221119693398756787747414851190784000000000000000000000000000000000000000000000000",
        (1, 0): "935089802862149882795371327430319532815056136498290380065454949558110752787505729010172847381558449265788193437755750506980022982972689299350844037667684876288000000000000000000000000000000000000000000000000000",
        (0, 0): "159207530860014156978376569030128237596892190022723904273137340611610187235672674911169572369553316330172033409776497214589962401330525148167343142463365709824000000000000000000000000000000000000000000000000000000",
    },
    19: {
        (20, 0): "1",
        (19, 19): "-1",
        (19, 18): "14136",
        (19, 17): "-90913860",
        (19, 16): "352158823328",
        (19, 15): "-916741051741722",
        (19, 14): "1694657213749255536",
        (19, 13): "-2291938751226804835016",
        (19, 12): "2302719626909651820686400",
        (19, 11): "-1727794667808398702956199067",
        (19, 10): "965555992038796230927253207848",
        (19, 9): "-397819760685881762165285431847052",
        (19, 8): "118677762524572948812522007745083872",
        (19, 7): "-24938719923069377549212323611121503830",
        (19, 6): "3546994512109782266492667496719863481744",
        (19, 5): "-322318457889572580384143808576082060270776",
        (19, 4): "17183434386670284132745984151000004708620736",
        (19, 3): "-470582156281933560242424598285161438618588261",
        (19, 2): "5274696764540151448449127999256767037511651480",
        (19, 1): "-15209749570389227793202178409058299760194810260",
        (19, 0): "2384160010112315427969076500641214071623680000",
        (18, 18): "901336949223449007625254",
        (18, 17): "3833594938292922033892519796232960",
        (18, 16): "102959060519345807251347435944229717613392",
        (18, 15): "195365300091780705881571885838384887554744861616",
        (18, 14): "66486770108588230696526824301081251531603413508948014",
        (18, 13): "6449597563048048557204142212446594997196673000382847593504",
        (18, 12): "231378713236986145810086595374168877790131423180382019057492144",
        (18, 11): "3590159117383792330002780847798294484014707197214952829318272488680",
        (18, 10): "26543580428015191502221649130019062632572915078747441921052517827550690",
        (18, 9): "99153342586390707946289431420137888768726435967296611049475684617277034112",
        (18, 8): "193067493767420065011123168452686702022450138936313899735752676755072850783664",
        (18, 7): "197698757111681252005253456931057631052247187759452941688544050455772971336204496",
        (18, 6): "105141844001892519382000156336504644908228300752724397178795419386460830362197423258",
        (18, 5): "28000424199250380760101182639720475054355331164547689910129130963314531350821247257312",
        (18, 4): "3486178039175498704009231482265868687143378870213672097166676432651402253700378255067344",
        (18, 3): "180075625362487526175243127870271300506960203535387180316301138718313896108917304095864600",
        (18, 2): "3109746953950213058427596112510523080878134646221202633916549536846590955341620352611890110",
        (18, 1): "11400928913436913420323955220590050910012840633891729543644150282495174773463163465113600000",
        (18, 0): "1894739651272918667917476724761848613743140887394274971499463937176475713761175404544000000",
        (17, 17): "-209612921944238395135803983221279937811002005551",
        (17, 16): "3698714015144425448819864939764537451993175455358767569176",
        (17, 15): "-1478405628556295326906565905655302958323837433287806047320290416188",
        (17, 14): "46266363181557365120906740022101379953044715375012087191431868016660554048",
        (17, 13): "-232387331779169776971904048975048330059729062196244506355371615697780735847752278",
        (17, 12): "285577756637015928821155769721142918016423058222659776692207661190229512286680859822640",
        (17, 11): "-113383123889977219165030896664374167371612548892605263565847781367700299884693795209555100052",
        (17, 10): "17692626226169810967390242970020460263416611553540130613831339785623611953755298417938144384456896",
        (17, 9): "-1253974102554547123029200197321888581768537561695113117162539920686866164438788926776353275707814246918",
        (17, 8): "45038576703566328742979000601272575785440118279040214232312895868955966232722709725664731072436294321010160",
        (17, 7): "-890592106875853589584856035529877967641106216397220651661275392492055735418053918237420107766181761947983882848",
        (17, 6): "10304293608660014444384627781455755984945273763092789514878965366567246683774571157782660483160523070567627755696352",
        (17, 5): "-72688974822627028076155952121414977875990008030648430631642822086950079168726676094462542675806018147378357937353631832",
        (17, 4): "319456726575038206220568040819043117518110438372876179102292865336979883339852047669438873821802364302140860553090562051520",
        (17, 3): "-874116133803660906519231137379087641194073870261506643011145692176086116512847210481793338250124991788777384882079018840873460",
        (17, 2): "1442283724711151405081811049132839381085248044930325455831820047846387947995612466841091912961730073895206849006553975170048000000",
        (17, 1): "-1309879982172093496649142526280827718443258506367169309163714510847316215572040999899944267692381708170635850093107188340883456000000",
        (17, 0): "501929167348782975428223845768270974033154020255632779710355707938250756408092932943686854561965518859179407996561537829437440000000000",
        (16, 16): "10695586550956494842291041792339660466102700229843871650055876488258538",
        (16, 15): "182421041978100503881652457474820030340676242597554281592842286119560126793714528",
        (16, 14): "124799132065516101416914941756925428972083125736483210744952146795156851536770613071401872",
        (16, 13): "8128214140846281147871632458111446439670899503243207404701981245911976974351817024071824815388144",
        (16, 12): "84529819810532840493878905761941286945515410490037856888750615959905754315443084296038616954435581307821",
        (16, 11): "196642826268004220392556552177113849593840914585599315179584079191342396950124954125404326048945222203600335552",
        (16, 10): "128938928579568882346323362263755020850172859141018040429312624428025012924248067837629148574456873918502488408644160",
        (16, 9): "28050347657539259898587293533716930936418971230565308453800283325421626342277996264903136710513947633353198821841534874736",
        (16, 8): "2271911473886547254557061430647709711494815792746375543185039463253449741796584649298288447273898647363704704230658170571456564",
        (16, 7): "74097013242014402599873241737945925759350234016377455035719188429743670769415409397510518222236378697211596266502847340605961713152",
        (16, 6): "1019778444768450224858745408809968356919931228259944156777287220001770210305099940029847451633165971876476305415038853342158051775072368",
        (16, 5): "6017343769473248035574220045116965137626107977270579308480987434670291246137855848506319381678010410471132039026866210823170870648086686400",
        (16, 4): "14922038336928913244073107460465139832478255817007344739067908481752742106632436075539395598391824312136431670509867939572681486638344390056685",
        (16, 3): "14490273446009139410805585249621231977881524363252418038028918842813195008422191078488285363556920416050941878163209768620337265095147086336000000",
        (16, 2): "4688664562279913864241101315704822538125048352330934176151133347756566967968368171374588483598114832998159457611557672645213388631008522272768000000",
        (16, 1): "344855706900772385075249698112088485569016997445760834221448944439328257255807612552418220865636074867527177807616435739725174181422505656320000000000",
        (16, 0): "1394767232330711861054744276692003070207906161535328828094495371751432561163356917637109809615065847305045598155306978929745571905483571200000000000000",
        (15, 15): "-59901702992212738650503499939204681526415734020027197396462660965399214505127787061021935103",
        (15, 14): "393156260581668360346478759128010772773689659606696212550359210031046000333067844109785190706504858728",
        (15, 13): "-148496136267762268250871431258966710313617887895943401356640619829260812372390214123002614168642227370468591348",
        (15, 12): "5921663189226600321414264346970121369087661308092799869701450444453187571451056868719719844178486289613019370421635616",
        (15, 11): "-36853107727904336786948168225241149783810205261102865613444242130089390155658194387261038688748869310502928552438582633910818",
        (15, 10): "46838065500644745947021091624817021213919389148661139464173964086262751214783992648810663792164352010074033988611083100019044339440",
        (15, 9): "-14786742063398871441659872612869972050325633106247114585749892521462293119365171721982690147232264657374164719616420512634669487487925904",
        (15, 8): "1352614685394661819747372506523227000185196437430560492149203657890135258495780422306601788512808088963184947598721338542953598300815870557312",
        (15, 7): "-41083877525684196325785689905726951026836890904562852412223977931245645259760633311196402933112436128851665202513124985586322390133006589112350732",
        (15, 6): "473843611183423545051692089513212438841859407691748673043346114826530557923133927655180296393899455451656546320793466771088729417315372628497039162400",
        (15, 5): "-2352074621413276837241456710163745068579676736705471327817533066417537133258519565390648645570483723375775013511180514261054945408250508450391746924341904",
        (15, 4): "5447775582043115562915343628466618429605046295818918924562471530063634152388562762572622785638107528839482849116586008440354554694171479425999939419422720000",
        (15, 3): "-5864539236211891014269332768934257774390901407708799492268965627117169978050143898135163454770423270322070463740817107226422445548561111458494310401441792000000",
        (15, 2): "2542511801052167898878900676315493240620508694143157360639359115163532078161937655032387506567052338682563038794286699398285714608615181078093217692385280000000000",
        (15, 1): "-273408717727358920922829338817184465640739948611867191274502078952478229624070412705860228654356592228174246201793445482365910506118055116225939301728256000000000000",
        (15, 0): "1291932379102500847406708383657803133122376018699674323525319010547601723444923221242579214649794439892127053226020109277730546412652082951036390604800000000000000000",
        (14, 14): "13518133792538018464992446112234193146391321607214198635135037641819789028647460512398394824451457897758534573322",
        (14, 13): "16162098841097333357021787948105525226293279191471912954516034234956184674320294936400675462524865578301763899277385585152",
        (14, 12): "1322193709017681986763822250403275405236702381052116466313504734032850832685666567843146833831368904018789782005501347428010658448",
        (14, 11): "11334061978522922657842168316584801010701132153071417892786222040474068466933157123429243932191823653929065082236295511668034689173732400",
        (14, 10): "13434671114222174132478414820235220843376784704392380968264322375934439849451713934808004096186645615571384176965163202457901269658112454058950",
        (14, 9): "2602879097483115223126537944260698229666875704177959110586423096786395304764334652590764285312879262803707068242400497432965879585355819264838079264",
        (14, 8): "84751114542179777231911242082654421279188486157532146629119933776912537671971404543441354206306324279828774587436476152518441066333368315687166428670416",
        (14, 7): "252132726114600555654956717608088465943475572161044533778138456532563438694048066722989810902217248431291364570387518451937831257671314392930042246523766560",
        (14, 6): "-1164474782934832777452811173938424071804573768030201513711037753068557125641471676933464071282815868298545622631070986840065162511721300076349108751702299808920",
        (14, 5): "-1483871692143764933059729598621983584968332367129991113788455029202413492679458543674302494204761233316187808820535625809406826599069134921627858517918711152640000",
        (14, 4): "26562913515246398511644180553791072742407139752073901029262131651087692665358270240746989499892898076485095019433015902186585257954959478394270551465001329098752000000",
        (14, 3): "-153073591733168913585086995600777814391145426169063038445705881745232333105230984610576166521712553886445315600974165869714324658231473608165978870113676044533760000000000",
        (14, 2): "465291786318356995154652142785405887996185585508011009681899531748245407516855325519322956670047365157334679109292872316791281558249288836037207769697616450813952000000000000",
        (14, 1): "-693991359397718858197533749082390109845354213561212575479398556223032292265734679960647675727964871364162905386423136085706193905583824895228584081179406615183360000000000000000",
        (14, 0): "398893145059975568785434089070792207102430386276153499967855060630076060536962309165909058200542147909464748420743164018966882730485164979129285157034548017496064000000000000000000",
        (13, 13): "-36523316893720363293670309379536810470083774242651371057717729678717457551709230702635520669219137918126561568318197669599902199812",
        (13, 12): "3522910279628194202686508681171446492671017572774661556939483593067678950833888896222957965621969646510381202998077262869509755454092117024",
        (13, 11): "-22495141507945056909280980473525968405347448772788821119225373773720564667432110350897714856984956422362149318116612431155418027777934907438129752",
        (13, 10): "12451805623440916398255281526489338203996379944050221003888480073737717460186394505516712367096840664811534694109667619696787560958243661292214420057376",
        (13, 9): "-747369145332017813226884569539347354053688768207515863414782982204235313029087820067140997623590481319517291428057998007660385206149735651119135659219627624",
        (13, 8): "5880713334246831075962243387742720929568845871632667948637360181887807626039546409621510576024866524871053843115798613167505393253163879498284645113228050350400",
        (13, 7): "6325589005721640888803568570728158274633239598111225695201450483624402384750847338049781308414038192304383011577619872471170474753520284870659276396413168537750320",
        (13, 6): "2927920265014001353108124249599137416148533207981372840553828913888640356493800606286235644751286315916245302622793799640496187137780155418004241799245333329833164800000",
        (13, 5): "594208163760151211088561060510231823804147052867598131638183436534673066997971897939197192414027736667868519822805902465752414135717523661110206864220570605081067520000000",
        (13, 4): "-90125155426346238781767551888362114966508447119528803467966413819412546905041238702181490163495069842989256278808424120652659310885813218177922090623096159973891112960000000000",
        (13, 3): "152512736290683138073584668979440354925011251196688548381738631092109472332274345198169968205010336740143378165681885949270347052656176696819369114323528628806954778624000000000000",
        (13, 2): "57006189831468590179344049298611630332383250022518313712585789889111995429600616735716286264428995586764205983413010122822703304193839913874893704069052314010507018240000000000000000",
        (13, 1): "-130564231023508596274325988303165625118779919786582657244384807867760568517075764828020596189019825071177977406900651019221576332810750800605894774435285319689487515648000000000000000000",
        (13, 0): "-1391375277195550149276669591951882088945014192824483289889206484996472348500290646235333300208980333997501172465212134280752814972348296209437049952417490589471211520000000000000000000000",
        (12, 12): "233325504433425838627283256178177099893912288176562166364416712467759671448287840547446219918800992583983268915652449902259903420273955023993741016",
        (12, 11): "570449283404631389396759478314626354587589049163931805569391533673784135421422996292443227839836846950357374299105274385281466263994729551873579598018496",
        (12, 10): "75408688513445932376018023132730007317670962124980212072768106794506493596872683740572439075700018267764532521465347482694080488748225442784533636781063374064",
        (12, 9): "-11105214075267440873220562535881118394935616634627129828273947587640964744873411649290320232629502920940831603348710684285023075158638419008644859226803453892314560",
        (12, 8): "1098671191413377017352449390668047701816646822007291896866567752985568216479442221142028483122545640943544607024757031801411914839052220578054622989576253891838044480530",
        (12, 7): "-36763656601228678994112094793280456183567992843236199440466957995574257737935243960729144029866868255741166073665584185347800892521086911541505055301718850094905837568000000",
        (12, 6): "429592623515684054230339512900838327202288525656565505777347079254584069009100892418188955843765849898551614234736487890119032201328881119799419811088665826678285407354880000000",
        (12, 5): "-1546357233757734425777281082346113845689449579625047864889195650539139138936759506151989724633743550465853635524196624436867443737886344748489720491629289999167205146624000000000000",
        (12, 4): "8210221377907174630724395737991772430902376499394788202053754284740515229928192011534549747818662247920075406838873430005678975783591043925235961159994984676341030791938048000000000000",
        (12, 3): "2901825011727669028119924887707894081563167365616157794962124050344198589687112806520424161031525220824492722507898303003273515245331685691043338805317520529385999407513600000000000000000",
        (12, 2): "9651603955885587757124853665889918644568281873872245804563796000422440384840324484796577025527678493490027306624748593372639040156512695113104501552546872204238063660957696000000000000000000",
        (12, 1): "422774942434327656051009488378430492711387225624557536789110189760778408920150280138565849123529070272066995009208959365735467309375259825921905160134834646090242892759040000000000000000000000",
        (12, 0): "9692000825599178431980800444123018494563368048405272827232772678005914661647609060002233413604107019011837728982810003454290458156310831747339683005512222481579511906304000000000000000000000000",
        (11, 11): "-445817144963594800747729122993810156072812233149123619407623338673487799759975778975789626315986693589065690796147443102365559549480858142903155053794435971486",
        (11, 10): "-451169457382104793400029947162804303745080879336801653127314840878487595311032163796830548082665950374616437368711598394438229650268680908296609944056405397977218800",
        (11, 9): "-24893756390729510831513965769215598683885040417357346448127482246954362584082620735156448833404310287593657577272726880674537518445545710238523248698816430535585332761880",
        (11, 8): "3466663294830863598809357257357154101825004357454304442347997187878029289567073913191299262748051992191962304516742029540905796263631892615710319034242542497112298792345600000",
        (11, 7): "-34091542832667171572141368250049806876404662735648684319454418590745642253006003732722401152512860514813558388890825650264743572292566689706896605465176757831414639799304192000000",
        (11, 6): "-2053588256461896812927284161952414102921891222167824688821138385616323196225362309379720858976963195964901392136186738566400590106362306611933449497234891905493348288634552320000000000",
        (11, 5): "10303705094138028423371003097941965063014126674049221743219882348072820851987460720156567137063165828897383395167265541035020468037932446081080814602624618849124230575838724096000000000000",
        (11, 4): "26581648213015913845064792849838229011022398262278274033901289279605393764006796781649380869115666099024541265919456667757216547850413015337805167542328155120937328992006963200000000000000000",
        (11, 3): "-67140575475081550513733840364476155526105368374845201966108291099388979098560747073379137968639354359874222590334090808381834238093861274474493004008477894520781122598156107776000000000000000000",
        (11, 2): "6861455781669469006021810578347487438656310786492927089856212247112436547550596712464892207905585321824526627373601626034009919065356697753625057686615436521319746964113326080000000000000000000000",
        (11, 1): "3950403486845839259353580078172664571598646506663067092138476437195114571982355165402558657888642704814275855342865966034005271362541408821994440581327063537908805660548530176000000000000000000000000",
        (11, 0): "-19449995683052232067571635803397915594831089072388729705277323912899395839742980734165787442776666430185253231126915994870340878239234522362546817441211720651183044847206400000000000000000000000000000",
        (10, 10): "277555105371787216601950994045690155236269261548159007735176493831077717903470674643337913841896430455199194586243050021469646235777449858492674980353008900172220016837556",
        (10, 9): "48146432596720576346565946020534679348263063018170519027380327378595339581715957775097214701269021201592538854439287055860135007056425666362663362575391456464532156710666240000",
        (10, 8): "8393837068215596484676473442083425113324142220842853218314808266926811399380057701145265361842640242771505941521127916227275562646161919178509608962329597495876539874675785728000000",
        (10, 7): "232208374480902258822870867265896562972582887124055089911007899488781044981314995964793409892757797947277651163699980087473076781022661715534196512460416712479667488392772321280000000000",
        (10, 6): "1319128988437113465425460789255935895020695118739701408955682217252366134611815892291262008600894417131064721681775578567688851668880942605609489203700690807666236877052764487680000000000000",
        (10, 5): "-5319439696576351058667231580035909272714299070055078394108266306213244091318093444571421077838351111736238018064210898364892839141144305637895366507096123601378245560009574318080000000000000000",
        (10, 4): "17051617359701883533956628839304179192718309221104762964830996863038684155600488795378168979084744374005322212025262656422634620721706990375123849035443434492151280456963136159744000000000000000000",
        (10, 3): "-42698254682140856629663297233714612794511762546951846179087897847097896429641947406533592261213035893224130022709441623171863057029003831808612848311150813944151230709525622292480000000000000000000000",
        (10, 2): "39024734307401836429668539515642397403177448722479037386112250409476315316872604788373567165490885937079907975206247730494373931460960051836630281294873601172237459139334712066048000000000000000000000000",
        (10, 1): "-3946549194852649030297123596609902603785695697881798263458339672526894196694769047266266207322374312105308841374526179286591524592977465696926480800013267611816954528381282549760000000000000000000000000000",
        (10, 0): "65503858340121360202722619436342985635127754105711984897551344714634275225462834499357306864844437707597062847906000480184730957591145672104743959266360066249009398348678955008000000000000000000000000000000",
        (9, 9): "-20949809491254957334901166988872885432323018764794292709735759474152530744112871406544922332636166633845322394627930418801943655895598393942945083179757515723457293307298709504000000",
        (9, 8): "-839064849554742754831471573270326277231548275903765203900259923962677446814982745926257445254627608755286267728189289469709936191322097065442859210481773071240354102825482977280000000000",
        (9, 7): "-24954343049032947686684493600570367519109839617515808610716516237874774995425713415097516058944930901903563065008743449806731969862037434184493146703011864678472760367612669460480000000000000",
        (9, 6): "123438777644742445475055665165271762437890309203789945996452036056189121501043986352163222169601706813836168553696780943016872238959314671626249190368119128208569262331464463155200000000000000000",
        (9, 5): "26018977655872176578089550861296698034719643243456949309763723969065520859468525880707654403387320934285426249734359904222396862543493919006219347689788028879764481744719231057920000000000000000000",
        (9, 4): "-981321271402688739048231628483585320847923858583820356559877996620988476129325933694814095728658949637779387595560094685358417161890379864620133026997574840984961768691811305390080000000000000000000000",
        (9, 3): "-30060672981001602724276862080623555150166604532389304382822740385110236928296492343188612511874531395180318726952744996340686957482194608531318021822343530299267377246389716123648000000000000000000000000",
        (9, 2): "4139062948499205718832866544569592864237751936156100546163320765608138519590132146997132798340750829822615814384733121420507804437953153396966832685599725980846626143933510367313920000000000000000000000000000",
        (9, 1): "-3084953243803798584128450593765796012475102174436111197996030393989954472865886590348279005691453599011942878309236747533923729428972346120906208046006561518764241993407404246564864000000000000000000000000000000",
        (9, 0): "-64043147368931396476136687830078085640852634053462668775285870430048537019218795631915761791939834238109769131402624230902847009243752936688853138034629964057268415318069304360960000000000000000000000000000000000",
        (8, 8): "154489198564256199428270525391021222892646676970160769734878131667916850422240702366740721343256221264143720021832891356150993470902509765793500858382926111721390800044103168950272000000000000",
        (8, 7): "-1671963081974838390653826571090823318349057444915171943276742669622109710222812652154880679157005327763180470042588682984302448863712276707567691136572946506344052548423713921433600000000000000000",
        (8, 6): "14187286164292993493624244146855577174427126240444353940261077757503662761366257597569071257660794014345817388784663792605416141824125473241256776741429160562441389056819919558017024000000000000000000",
        (8, 5): "-51242326470237046203530834871889911650301798671908647292535264245442436070138497494088608088566586380071376564502602627593354405993041315940431382640237149878622676983744222923325440000000000000000000000",
        (8, 4): "17572314688935743917386521526124636381760272032349197357053980750718284380842049765999099996211257887865438253016938958053854107286536017158901554179045785485663443779078106942275584000000000000000000000000",
        (8, 3): "185285175492658308431971976034619552037461989790876695759900388048295302959083307921769609383966031526712168648309192398440045677509813570165192385840606658384788929516475362039562240000000000000000000000000000",
        (8, 2): "-163227889322270216538991509986579551639794840529515348934283149529820426133250490847078011468413545964866511590836020120898399227407098078833072126395753585106762702027112287098109952000000000000000000000000000000",
        (8, 1): "-120596168589843436791205577566916376694488242928198376564065862224194298911847167742251547112034160902689955769358443431584005033071684869956105495736204640503587024040318457861898240000000000000000000000000000000000",
        (8, 0): "123270344352217521571578390663928212821122804667434251237403813190125740378755852578859517850356033077246645111285994974730913583672415887728417692263961792910187418058912514873229312000000000000000000000000000000000000",
        (7, 7): "502015781736428415906684005306428342019697020816846692671548381347789892962733818392644466110886210835229248121665198850731113694921355315142048249708047643456740972304311204708352000000000000000000",
        (7, 6): "147460150906389478171512270036449598519923970735147306026779747462459413058035216965661562091802130622412643318410715900517138509295419769908313852485141863264047459202356832790118400000000000000000000000",
        (7, 5): "-1404350462803525068367182294203905864971965505679693742164422616502558106937710227184071749691814744270519743766033090757890343292582053088410139918252138665460396527857473812086915072000000000000000000000000",
        (7, 4): "4640010006312503696723190653497697957137754045057414568282767650480974045337784482117474625107131189294937094539406407494386866297469995288963282579520940668237606859128079059685212160000000000000000000000000000",
        (7, 3): "-3671596974069676389362239231509053699140937857842412072486134310031497396803056402762069077532190505069354262937816783917189346174535593858338095794242294963796801720486902252357812224000000000000000000000000000000",
        (7, 2): "-5755086846764435044821701393932800827618679353230741707135144518805289995610622506610793295247684513244371116856340346817200606840545161713250409218610456686178880367847229372508405760000000000000000000000000000000000",
        (7, 1): "9014989412762803060409857307890604744253031338378459752405921554644925029117857392462774077060057398332495621995699055426214079191150153206775923146649630808218990594216999510993797120000000000000000000000000000000000000",
        (7, 0): "-2152291213477177247862894737545353041340957784439474468991217010673831528333896801469173732413804504422192166861949893535425733209219170501627350779395965976075319860952405722299105280000000000000000000000000000000000000000",
        (6, 6): "-1826088664312120179422131638651504734238535978202722319066923644493275504811952084652557738067746172903748952768462906182439831643090678971825152760564453959469615489488904369926569984000000000000000000000000",
        (6, 5): "2561759291602592835230234623383005178560372926440832831151056545895855556939768761287244232138082534108555436581134233639005409111754843743942868208991095166827761339601440682635427840000000000000000000000000000",
        (6, 4): "33349306831084836657090846904463502319838599773464989287746150641678329555230184055199335159403486109165153222791995542206757508537441737492685066797810624018462596560581209296780394496000000000000000000000000000000",
        (6, 3): "-133468055055518442665187392489845247728838036988084599205994398760465497453393380700836753739514303258185304008550143033071751202555311492673989145887944648565123195566527118763318312960000000000000000000000000000000000",
        (6, 2): "159253964841599076347759998058434348453752923619290747837209777082395174308658194774386440389966756527914606007488124433598397874187487978856162524647306618313398222449470336465060757504000000000000000000000000000000000000",
        (6, 1): "-49809019318064046766772590203099178845848389263562754654812790528075387507431677782424517453136248184289833523426455887389050851681533035518179692712666105564793533920991772161972633600000000000000000000000000000000000000000",
        (6, 0): "16948090905597251700886793204015700238411804726682176626532923630485003321722347038806487104203214360848544825551503709356799422389817178543978109942959506015977047263151423425504870400000000000000000000000000000000000000000000",
        (5, 5): "65237062509210844202291588576193250757425749222674390250947684038926586215984362067673452219460941676024500185988377272896914965881029193229313730618781605630184270781888595402971676672000000000000000000000000000000",
        (5, 4): "-313819734306054578435158304919376346148239961692059731072235339193446051214632904290068715098396653733447256185595629759395914201770470787425593242527755184220250009299510791338280878080000000000000000000000000000000000",
        (5, 3): "387199893929695379313141066086636345134598406102230651597290681910319741263822252912746722578953460620356299533506845883180638544061445351125372310338397113055672783050389542472781922304000000000000000000000000000000000000",
        (5, 2): "-9763221394523062002894904996495166328249789002541774078288695145909241001787177629213176629103212107995522539353413077506015296112030200389819042960709264063442448850260978634913218560000000000000000000000000000000000000000",
        (5, 1): "-8295474396950439740630419625884261582065447969831084164859979305561106772484185062882422438882749825895564337156446539528279035591920336184331337347856320555417223260662077106453217280000000000000000000000000000000000000000000",
        (5, 0): "-75684682212714937300995906472395854488089257202310241140812022264337607329455177075014377436477907331387893143871573730443699697975125889671357009829713788201104984896671688440152064000000000000000000000000000000000000000000000000",
        (4, 4): "449391216701380988441249719815239251449332952755203324479906895688734593458900830759356951737202937036060448701969884725329198633967802636116175731133941691209853588901353391665363025920000000000000000000000000000000000000",
        (4, 3): "530647516544532280802967619020086613912382716300430469053109561656643524662298952068094176929596104236309075206069937748044209292567568616175027200182133433868118474350026290628069949440000000000000000000000000000000000000000",
        (4, 2): "-991174482785339414968115795888646497218359022772408550684614453232594868525474545305971224805406957857246862020282329295248322204523968651023939554220530407416774551038748329973794209792000000000000000000000000000000000000000000",
        (4, 1): "198420584393576901744018154276891869301219738605352308450013988939404687673243240093655033488881611191393377542854607290281965037240161914272977616694169101016264283500281829149072424960000000000000000000000000000000000000000000000",
        (4, 0): "201845056856763977305783999007132874665471094831258221877276721069852813388367492571600838554971310937556356200613098468092632226655172633635185764789252444190696312506341004799306104832000000000000000000000000000000000000000000000000",
        (3, 3): "-1822556159938432571822997483061247824832504579650316843635129940411891991833114385763163714683233348413986097978707726284427926053513420059000552539788639912173027253999003616216461869056000000000000000000000000000000000000000000",
        (3, 2): "1060426504670589457609058625886262365106142271084328992530711880723168637646979055368323616996396537760229023495107214063037922061204291726763837412828682125617962891352137390319772631040000000000000000000000000000000000000000000000",
        (3, 1): "345945628793588583662774583402937530352938341896281958843253486307071562023138932593681569444893229896462553147483987771959151581307827794070228635307870639536475738823615748724475559936000000000000000000000000000000000000000000000000",
        (3, 0): "-305073831968453175179235359416684166064579619471901819076522873465859533544260032984634708230304078552743807712410166056995212233249369102688715417452062225766077639191180112415172853760000000000000000000000000000000000000000000000000000",
        (2, 2): "583965105781842436843243904813065575003558255776615953318362483997371325790613053502580541621343960044562379347974642179116063383945381992326662504962136171756422268645620537669151883264000000000000000000000000000000000000000000000000",
        (2, 1): "-928478171686997807231597011631411883777704278904664959163738744946176661566358069440794055736570351583465008093504521589992412651593446916114092638503404086525034317288656451865401098240000000000000000000000000000000000000000000000000000",
        (2, 0): "207300949578564243218645704188233573756698565784889102274747706712849481636623733588718435095972999043849990718073555702987704135418252911825286962549672213002200479961567303771369766912000000000000000000000000000000000000000000000000000000",
        (1, 1): "319821934456971398416636367068069350851929468309621880780198313520246860282658164285729476627144813512468377573794192513342453004956400687116953876323171214169599865717058639525970968576000000000000000000000000000000000000000000000000000000",
    },
    23: {
        (24, 0): "1",
        (23, 23): "-1",
        (23, 22): "17112",
        (23, 21): "-135516276",
        (23, 20): "659096015776",
        (23, 19): "-2203057427174130",
        (23, 18): "5366299789652058864",
        (23, 17): "-9856457681231624449544",
        (23, 16): "13934933481626939944756032",
        (23, 15): "-15346930478684369730354320247",
        (23, 14): "13242904273378648361329133308840",
        (23, 13): "-8961136986425396506850311710254796",
        (23, 12): "4738491895055475475400420407734955872",
        (23, 11): "-1942865521848823193318428749611685298166",
        (23, 10): "610130343449320528167335626228586923933776",
        (23, 9): "-144194848221364196420306510346531376897455960",
        (23, 8): "25036781751257162349751327154791772747428130240",
        (23, 7): "-3091556070148359855967005094432563904556751084615",
        (23, 6): "259720724119905397160583916836141195215779734946920",
        (23, 5): "-13957719518097236471645525556138568582899341336967020",
        (23, 4): "439019537823587899496497186310272750059566795737116000",
        (23, 3): "-7052393782054942412871555266036453848830103970754098934",
        (23, 2): "45954874534338771866475905247648097856384137012620816592",
        (23, 1): "-76132084898512538268443840599977763810334593131271372056",
        (23, 0): "6761017518058560303392994598741934649661762713575424000",
        (22, 22): "229333958178555201658457316",
        (22, 21): "9480357754781758323667979296828177440",
        (22, 20): "1458508257172836313738980054964174152811282848",
        (22, 19): "12100125591140386683690837885363567159446522463718448",
        (22, 18): "15306331725719564558333067402285375187201957286287936860504",
        (22, 17): "4998204807148679113282938278433789164771713071727331046072898368",
        (22, 16): "570829998494752650733906441314619642330480870946577861075847009658688",
        (22, 15): "27547318028170118395737379300855787060067400627802463260723790663092173416",
        (22, 14): "635614088511750426373014397095450104268757928735720498774609268338448825769113",
        (22, 13): "7618082655531000883827267103649643460889125725259866956574449806020529459580931824",
        (22, 12): "50148072624391549868180468435620730794886784311701679440544149356883285775414690046696",
        (22, 11): "188019475104555483229203238819884897371660127902400530086279746059920222018421457346037904",
        (22, 10): "410150154111534310034690035227157612975265775201083582380525377822401327717028919709416617228",
        (22, 9): "525037642527531659071177398621829693601868109316634283113585632765034996617432108085489445764480",
        (22, 8): "393061235292093479011260848552343948187798724448235537271765306105603860630039988679186543088609440",
        (22, 7): "169353618284579106464956187148348710066209656295482041452488854280003749114227987564248623548123144680",
        (22, 6): "40716653164217663217006015113499631671078737504972652928943971111402547976387849441324692637129726400791",
        (22, 5): "5193072614768628766628510386539539709324175113301809192849427182024735503888673797708823943157779197638160",
        (22, 4): "324444330547331729854398960697332982602114189226566978936109885793489036371836921420710645961404359813526776",
        (22, 3): "8733492908678487286401152775450699675821615641312540594813828347172711932745482698790056061530405373221972112",
        (22, 2): "81025656294483192882376692422445726288324138969643907922114839431413523019224007787603890629420653532983037716",
        (22, 1): "163496289460899837582166815535905581660152610112171581884260450276897035910572732744727866960661930604118016000",
        (22, 0): "15237119293164911599400763983426893818818446130661027462479217529097829885005712655463435767906975088640000000",
        (21, 21): "-14175202852006521677492525635533005065008369224756614",
        (21, 20): "3030209957291589204545863432995887264006234287012199122987349040",
        (21, 19): "-10531860784132862211940014576084813790838102320344914384686153889865776400",
        (21, 18): "2246620917597861666267333743927791052299242334371716773147986243574510535970105600",
        (21, 17): "-65424829298424112202783951337377681053011578253991400844700123122320247591881572648196100",
        (21, 16): "412746957204200311288476974253974446973100862088585795259003616457980426618972936800413895448992",
        (21, 15): "-764230078305171359900029891327185677564284335115845511977785403318349340502494660646917687948699423388",
        (21, 14): "513651779618227491312013399715887824967600681193462002107093143995420951526367457642335450436699996912830000",
        (21, 13): "-146540057298990647020036625488209053920571367503690696775755460846947913326602643651221444387251483112920631683654",
        (21, 12): "19998672268988714042936958515653534344924759119185555905074341898678273305192830485555453397750099145457408949366840112",
        (21, 11): "-1433861354335544089241018469307952777298050959281605845764709982967459348825771199335911820548375220733233346534380123922848",
        (21, 10): "58185699348861243109626700650271971242863738633466443633572162093048129287611990197599570615617726068374087866760765980905831360",
        (21, 9): "-1417799055545362091105002787881077886597744866477449264212855040489757141796479156556812864313888137189250958407684043841221656786524",
        (21, 8): "21724919957810618762772709983078761737965463491215455899243325144732249332443118529904791818816154643156768992598633189194895700141514848",
        (21, 7): "-216702786405615900404850209097692184059366650695677775197894770031354804740523925447915636484366298601748831411445866688105710082633261548668",
        (21, 6): "1440687628439783507545837852250945669233151881869034254879653138001887355294367890391812950355091486379340721921741951625263448999134583694600208",
        (21, 5): "-6462687557072369655583814861661683641610381852709806504630699889906375003471794929341355125519969471733297520068985508373283098828266829768853592852",
        (21, 4): "19549881132540784141612187163615660115540488294008551838614731995338958123507938942198195145738332044936271701933649327242220139905438197373490254340640",
        (21, 3): "-39184087317147088233878820787305921279834047954051692439917843572336321377011945861164031474050744269751841699576728608709804377401834737194772718489588456",
        (21, 2): "49749226872362172170875744587283237324772342138277165874578718301878163644157576516354338075789830502793154048936443123852652008166695959320002415687499776000",
        (21, 1): "-36160608186837535221555461312596344192830617829815545931768783350075357921645511171455159727222441037871306941126828157941212928698317125776351031105421312000000",
        (21, 0): "11446492273981781701679216914373572198295134537045617369501733859911121084004092731478157311217420338456457856969078213628554624688225347072216708631494656000000000",
        (20, 20): "214607204110709227184123162743175915576522648367155658740527791085873827424885",
        (20, 19): "54212639352534125667839935654975023901427153425781312851291538409322169020098287260159968",
        (20, 18): "423688764949868230148974970977944160005429904662530857328885482687166399214913485240622923718288752",
        (20, 17): "262689686676818298681898891492145655548430501598181677467547734503516871412677604691455811099171355275006240",
        (20, 16): "22808246036121946239688413174560990359923468699886789532811144329025423124733412018434521246288510133616097678989096",
        (20, 15): "402971796136430722377598074276608866431533151364853929056809296975353590636236894065995229638110219314503241420839132999904",
        (20, 14): "1877060106330322145774580567055918685025018213400751515230955166886799182626110433276550304510048754195198146569294585108158973512",
        (20, 13): "2779521922535438257510503935192925760377480569464023614157851186099704975806011378711758536749814599170739685957551992684565137705875120",
        (20, 12): "1503378219042486584555109477439724906220024533306727556148058634468473697780297428211394664305322468481523480506132696354125878864040562127319",
        (20, 11): "329712493940236921226663479397438958821444439525034554761249903073539261917223293896486530910351192460099808325754611410629782110426022641527552736",
        (20, 10): "31710016152833868294912515273496494709064655907917712934497755126353957478377216037286266439752654976940888826639770822745614257061496738348574285233232",
        (20, 9): "1416182385576753220454157326947683042852822397370225886193681738158349836768511958228794602868756442838815607682586354859278020302737398593746148142049065440",
        (20, 8): "30537135132930155262497762586191417030050984248177065079981197485675568717436107937699068313958207397103314094685371476395880902512288433487598025184081703581128",
        (20, 7): "324898528666246720742476455154771247209916026608377846566346933243504138226087510300538176418875146767508410192720160644900915645722647138873616022169813530638612960",
        (20, 6): "1711787515643789135691851918593864277070023962171196037517602025557811318955738809896309485969242193167677575069893200292387058116458118432302941179374307152704738935608",
        (20, 5): "4387525757434024889891844366280183841670250310030597024122101061669268191734568611695854514895409473933472730648377982387874735497124674175587304173633980448541604655633440",
        (20, 4): "5220582558031233678476342695056911754751878622519337002310909710816148230693295029257898908524525637276381956773762555481912798641966842812914440086785190262148528679045463426",
        (20, 3): "2627602202672044437564426277675374383674740886601111486288966391777434455769163731080568599618119791600767617477962854797572017419665694835091427837869803123732480094655504384000",
        (20, 2): "466621788232391022631755603595428472449512734310946192480161947758061412242630193278281538315239358228838841298498250379547208660713012965861770254797351092063766080277970944000000",
        (20, 1): "19527394074610045560347035535261753784535960928447778908303152958057300608972412022417376868103638037639161858566715292030088873788602924200348914366999891408975999277203456000000000",
        (20, 0): "45021912855422863586694522417504931683251369607318463746857838059876141043429048664580184609711168228527529414957821934018994102621413149427438592644595775618703245180928000000000000",
        (19, 19): "-450156114691068274372533836792833722400220762486852720032877835923284266735533659120253092253040893921",
        (19, 18): "54479829536691845609624189274379924202667287320391073789319109072030727895254100835288270873022570032055382434360",
        (19, 17): "-312843057978673389170123054200539805105852518864639118524103002309398269418075097815155095734444148448066948721441214705972",
        (19, 16): "166579603923733171969935384427593915620030188898229347074526774246100145125359123263333910545956519544094226936430155310369803243552",
        (19, 15): "-12686132264747940171765648579014383356509731508249551028442300450991292883208585658539396514787706517991065533372041334340815631751640883544",
        (19, 14): "186459948987600723739707682548969762324077214264434565193732871943522205108759915794113582433042515440513705868695858541605906432735462841233554240",
        (19, 13): "-656910789003349422601584681652453515221376293765544954737354854795422902237938219848790906756647524954459840153115647812661010229745536519018935360231432",
        (19, 12): "652748188206453155400418286857389590007460267564454684140610526270575124585222534271812728871387449685774813533084732966347983283576747493828700109969728662880",
        (19, 11): "-207747306136707380030411562168493082990189999811427245089040403738696169301383700333200629026553952992756239050109325801891365633088096636268610849774965676428989932",
        (19, 10): "23527992900497545210983731350765585575426041389700043114418695132493068717986700486668851422084885976285612252742878466384238389835444331390237312994459022821155990881952",
        (19, 9): "-1042133908283221575079189979644491445016542188214390088623183544015955677864457071625163786700510523187039676629376753499969182454726410357354805629821941726414326199309552576",
        (19, 8): "19789661186112349365529979824714223440186548615301753034615666799037119458619635861361514169299576163563334005972235539230534919099139345909127896816331063352475118776604117146880",
        (19, 7): "-176275954431560583995141527708115382456033951790951851226247324979376925644647231882720116194308056700403484198067192237932241603575312025255695832568503527198971180247640488281766334",
        (19, 6): "795469283477428787174593127133065950606737328583919924178748910120640865105211974101748421784275216908827598970385186399970646508186132447458538598142057788624567372058054307279094479440",
        (19, 5): "-1903712284338205304084868636104699212749163500068501125460174007310766690692647747614299123507682481336830967083083272565362265468030476461966947553608541428828555724595890374965359480466696",
        (19, 4): "2410856068584313048677588715537820894185702180133830034876574627793028523887980817470734458587450133849619440884633027959669876067099481989394128077410164434027171544402318616811652657766400000",
        (19, 3): "-1502777044135761390133799003256012616982389892514205777533934652594910635189636785747519263305652290193534002588299595563616962078512208272852431944033926865936742358482333372060930238578688000000",
        (19, 2): "376087823568096172867124083963862973099715584121406140970020273375973540053917685112323817498645942769726930331144776158865067790308638212165570619456316979656377868306480871323487774441472000000000",
        (19, 1): "-22455409189710269258469417246949441346930755829357748666239625628200637005959572458551797151700101653879459575368618675337558726982155909904954671138074340012825635004072974687132543090688000000000000",
        (19, 0): "59027475800850354105672450348853054892743939216308598659007842800505903203750693325931512377298864626166879073812002285549937862546075796633637291239856160574508299166511015633077927936000000000000000",
        (18, 18): "55594991184139140659167120782046472903796635648794176922445909670445265466071669160481442335498929953729707040236871905276775",
        (18, 17): "1624698081432139313324025211135575618203164908064325006733051082839374645556507570907504730780982146962389424905047423110856229400846128",
        (18, 16): "2900941176221684600907753347342908505199159036754402786581890837535173548077816506575536174269421360634463364460062166011485282265536288520289512",
        (18, 15): "513519812392281423412781908223464747507147614503251963143304361588388621472182005157979073067790658396448088364898633640434754875297627549949980356837184",
        (18, 14): "12520917462066562191239919240683567700444829861112848008966729582883498024479696651131669759235747398113685429898074594030514340422800629297937970467115236113944",
        (18, 13): "52956683758555074067579683555246858711687397693211805527995602036454145831950944180686325338118133414437804886926219585536770122249884991212027538831830308697531877696",
        (18, 12): "45632410037619919864598229888931944734831503307059699071672397220622228400529410569411235272255782621705478244341021838090520850093316520577335625421179020663136648407190352",
        (18, 11): "8853823642399764566791508635846502029233502799729687752369703148958121853351067761143951763999855552475705863369745889298230341328078610297452655915083114230573476372069380577696",
        (18, 10): "393294961767492731750206799235360017739292307347009170429503512439102617518688649511990675128668859881276014809255439184440143223189976799613563151885251471431902151298060329095849348",
        (18, 9): "3133573160541176136546125330502066766845144999150787337773538491433316400928558952392131042161844186413089260959165390825835765190918719066763256765590709930242401388469064348073551762880",
        (18, 8): "-6675792853145251546881747875609405514823931228279361613223462798320328393141863412866762521416551508668761932305598176941841273538425208538214300545449362908234979129925722677089033453974176",
        (18, 7): "-19397198831626475841327198734542465328927080790249643405324061075642544476789872379642401164844860462187301884651303400491812866349878861982170725923958096017858175897734239505800552411214873712",
        (18, 6): "105794572312049092310922411257216142926627792516319276891218314217591788532823342902983059488809066281105522365502679533113785006185341191186747489372533392898014868680291142498107507399511527719876",
        (18, 5): "-786663722151508260508578554248735240580934902095305905295037643802232430584543761881139204487655283032254106311767263046878978348299093136153008412400383983246579074736893601868986481477386959519744000",
        (18, 4): "5236137394419348107140430289996359793561786145784923240357648421889180095455508195146918865514930755683267759886770279706095791597080249318903989801887305020859225860048280189462588511079472302129152000000",
        (18, 3): "-20708674434076626612981314113511400675921320616164470425018227566054323022869647743705584191893496970846069721570521175655268842243618165459929136669481972366403458833633392819691951010792005909348352000000000",
        (18, 2): "46368592715001485205721587104494059071733370997084111410308386740244110533951637066521892943117545600875481697271468276304871335994090722120417002078320181568393075356774194797206773374643206304563200000000000000",
        (18, 1): "-54329443288195570025687586438159933424866961995018533267912913886677937878978109004784527620719324878893931629112985732970923264002995051688210546746744545732818697635418320291599301197600578015854592000000000000000",
        (18, 0): "25796644923650216514370012699641461021550359583810843772208087482869888566230349750953557957862497723303678494007236235236430643415087706803519605651407873806845822051806038829524289594892123612643328000000000000000000",
        (17, 17): "-147574533944784987825965121961582411694072394701577578577431778968300881192645232676997889337828556401291613149195769772321317450599811879836972552",
        (17, 16): "531888105617473120948900605257107660892304271997802318299594537606692010362014524182581595036439463225109497767370223720493671370286059839537997336703601344",
        (17, 15): "-127867827599721361536097701483856245917027140481040635171607222263630206229557720945425626276365411314059930225724875725678681445817662070721126470598425959126438592",
        (17, 14): "2890995404298192654612026071419657718514421477259882999836760463842466023723825516094540228703677866057019078419023527277466835644552754361830825505381394768344418265397888",
        (17, 13): "-7740611057733139434154640637836527034575096431179063077702662688674020530049151182321985739749236051914901025628802635236054221557942181807178643974073694669562303104231593445028",
        (17, 12): "2872626550261827578359475606596269688203398710357446658051385419495895013245676408348926740548998979172027296742641063381179513523373317833585550271696492924904161354756498594637597472",
        (17, 11): "-172372078334056953365185183330685261585385419039768773542993798921366491153248016720235932751268968695243212182936440716608542245364948665778506904651975713576816031339409520899543861297056",
        (17, 10): "2285133655422267679851923926970091877047888747658584138538715820386186417449375672092999827938751009958032391610510236878826675228661193172597603029440039634593655689010435734838956983756818880",
        (17, 9): "196350937091137409060294642371016434235860522233235301504983355008410902620181162267822314560463020011020317224605633337792872058433097691828948290030561910378330942126184526837203561123382141968",
        (17, 8): "634604168563568010755092413139960409939014382294817829068357009899573452943897455149203435995160168606169001294850149511254014677268153327888261783975024723187606044617109762131466986540748810950291328",
        (17, 7): "-871783755040292424171480450879159562288998990179283652091694474532920417608455389998254543567427466982182918853580550471252051178315145354688514293606900770566130220249835800815497123332900529620567206136",
        (17, 6): "-68349092069221649450825023376279487378166414160834244119419228241120264729178283253363331832780246730340029101041431814401821195224141522042227532585565172933710384532831763543221054879463186071971490021376000",
        (17, 5): "144234123756391259387149006664269663402688398740610730323330175404887205987234150604903471440702206092098146759070704810837440238547897545889915911020089245796539998948127382535140266042481618706860578177024000000",
        (17, 4): "432747392836632676840615446634949071678754223118572403034654595733588592382456959170468660856224169098145565618700877578843906160844873199831675634553292153394264822070562335923968819380426723435095462510592000000000",
        (17, 3): "-1121203728280547029242215487219816343606627506037472180817308500412620205109303106900811560019012705497124363114594907218087237774264233910103774133079841415120999287455639899007248541008158828532365696958464000000000000",
        (17, 2): "346050208594357166260972561744696047386389873534553592534963102644171546517671179580870786817878333145585050352287207292269704816129356504050466608510264861595980021601961423597149050349751602308061843161088000000000000000",
        (17, 1): "272734723178143376579340265559221600918190878430951763322337787712525684643733970147876917772779709838688512712183783594349694377768475591424533104152786725570303945620941313342918272460936073978137836257280000000000000000000",
        (17, 0): "-2004793488472847504064614425331701355996692047853442332172098433730816627924334820363379561435024982229145481334304709929367453228380073765943380327444581685743765642159302711881398650468219626125954908160000000000000000000000",
        (16, 16): "2437911917957137270994735148937878849231063845834240552797696195669898769729043109222267033770791243596895915153737516019085787287721623798296743431155776373654371722",
        (16, 15): "476474464992974355034341380294614150950426557083529377394216032907608179962117685442403297085855829709905687757734906832800504162608780128397015349958216173433584842347654400",
        (16, 14): "5521921124768621587648799332858704959576914503676235525574590488014790033465169328535232033203245730553576430584968905561075247685027864075941516548583854312728967463417199364825024",
        (16, 13): "4466788060584256529968047256669537912577252466941139268819305516898458418918109947902144348375354958220219311315554614518416158133691018769504848721821809685795072159441255876519844094624",
        (16, 12): "347613656522749547915211150701884391933624616752268714444976742653538298117497668972003326157072495639776069122795175913907284591430331281064066291682022483450015411880769338343282003224867960",
        (16, 11): "-54954935272064386947434176758905273170280150498991588758313624386034423455963022774849541523685774284795037599250701936223254789796881242768691388567123147063607309205741517134897632630064029618176",
        (16, 10): "8351668018397544042666866651988805338726925497121507584866070135666871495697195684028251285956100993586228014118147071439277488301384566561784456316246546635318675841589421859250357344708859550997639904",
        (16, 9): "-439823890540452225170381253113694454796897655734305914426827497508812699894866505244523884740895596148685344665492486957345252270646605307192723029214787085019290820006401676632044877828767170835888621233280",
        (16, 8): "8297461055448824807785331844357792188558121366090301532909074564194111303583660070723998055174257976743018653877141730239276617600882332986117945262201675271834216074039586917927136645221971881768982559639283951",
        (16, 7): "-68451671669874623522943194772595661744032451827128887761566635180669967087612779488621114964334801109551823190526466428805524594092596673562325884180457171982952718848008848236621571215189610316835778662986489856000",
        (16, 6): "372138952573199720032038180027388763513061533322522328651664229373099221074587334855688258795621542249469108580070856083303456271669867194761001673593626408580145344930090447973545739585099220473791586072570888192000000",
        (16, 5): "-360166785431484421863570037380437754015477055253479602966684837930259290389221131415288822513890888813410047434867022211918384197982655401361829353650634005591531947175210774225542437649210198137271188082315493376000000000",
        (16, 4): "2468545473527919207416761520547714437693028751763771450697004323473773639387716916213391413066181673831685784229471571824263425973208812383545301005986693706198218197894772083360957119127117763715965615736839208960000000000000",
        (16, 3): "861864248520876859208646936136174563432539142072934337572119514367347239315959308789529938132495146114713550849096603922803766987591852150131558320663269357414039121160813750745033588442268218233908938959403089920000000000000000",
        (16, 2): "933981144226292343775375554803866001786241700692151817914647414611443762948627210584005349128618742712503282046238339181639937896109395015464847170975960599246754737587508720949283924035746088108712658945437597696000000000000000000",
        (16, 1): "34583527066327282633247590421970663063614915238034211778917395590478397570226890154939144715852856385194433036962886512892489260854177547364712103275522824217024696619072664819357913073894073741594672828191342592000000000000000000000",
        (16, 0): "313834667476315541074611653080353992466155862809474381596837089394914217608935670490997261862485668470753923305782220908534444316682463053417903222624059784413875194114275800931367634131682145039178878087593984000000000000000000000000",
        (15, 15): "-44622319037220721531333062062649558264462398026475491836627197345871479529513322560691499643468150095808562015789341217000856835441565251910310497896651704093729277176258786959671706",
        (15, 14): "130267789549412992440024796979488202805858557611952882892186540266966531700172968143991849081624027864190315469571278276297658426033876441942882831232491492977147727878633692446319970382192",
        (15, 13): "-87104482824555203488912793998611886708694100613332440720522144207920711923130408175667204489823212370930990193215623463341823683557194936420816076984256470129788758142456324767553889707094866104",
        (15, 12): "-47843785297763465720654990533422990965432389614824748310179008619869198373184819329832768175086069320298471308904153776834589193311670656151610658643137280598459878050334910473298064496036010523872320",
        (15, 11): "5828144934793537598103586760840835706993554882969737359917664686769190381231145347726287259055205444590995977388281829169881791760750104372850847312357168466287871265513911797891464478815576584126944413364",
        (15, 10): "469009394891776694860879518604662469712649675622671935938318909922118321987926323563447069157164823308369917641309960937263331295674426488562922060445505053089828926909433493254445785048811937028489385958524320",
        (15, 9): "1897039514312304395548866895275752246724485574754303445820908878858684840859115648349251388678859750018118774888544688245073925097474253626665767784695766958289829473218228408290288075408396760373049285977273653904",
        (15, 8): "-517031667091009581399233250810561253218878096759459763678279063986258742013972287388414108075226193052077290371539787127248643316791159213398153376278814197199384267541591734716213778490492144420134639906466540109824000",
        (15, 7): "-2445425849638387915327452700494110652974575035657391091915639670375666485738036561237282580823116479138479125044424037327917811094070752970845850417542213642134644042964737277093797838398424215775906941856572524986368000000",
        (15, 6): "66202291140065230376248974329180036038032817112083955535393975512226243929312543045620479941094285547010861662520672147076555051700244398124091739940225907091260635534787092200042016936448171134536734402825647107866624000000000",
        (15, 5): "-65153225442762735347969803627096828505492318665551572860776099379874778096704009327552566901676645237338695983035297696546832172048359432988364377392863440674732204172848382248266578731779944869389593120937982038114304000000000000",
        (15, 4): "-239651830232277646744488885040278005883842100826297309630028003476679902650101184110699964018698188279815668763909795812994515064262203106732953444713128994143562918608200916448670673948820428959939719199888148568997888000000000000000",
        (15, 3): "246428802164436494229696981383327208678130165780487090637229855390700312450384869750106074687945366791052966707932086797181232700284631153022304394194691491404400305377853240155206403526003979084165591209604683092983808000000000000000000",
        (15, 2): "24839398853822673275645085523873210942397640973988161177171270595049583787693932360924314043247563758428587770674702442865850134478254958265264430087384385259617441415120564489774898827304477840810917968903495258996736000000000000000000000",
        (15, 1): "-5249825530369022252286143178438410723331793886055351331719435295040882691503051597776011442647235936037104214189564401291521163774164475759749108090905234234042845556832489427700569724506708804164679979003103116525568000000000000000000000000",
        (15, 0): "-14021629205067191297509801072140939244419873359371093770400223116699788302562335294890827664993251489830773557002988250866316927003356871264699427639877616456084896319083631026587158235274170931236810735786850779136000000000000000000000000000",
        (14, 14): "633957795739070184596624710059675286538353185620713257551757415353252943064969686944673768259568355954681405924544639032365391673321581679241075888117590082752365216902846480207363251992242138698",
        (14, 13): "-1868951075431652194414502131062094253391766209081684774043471558982424223869698941626473159934309345860949844262641384601733647688526048681514228177631374517076495520606471971227065740532896819560654240",
        (14, 12): "659937830804785845606226203691261047090509998500537708253280163518324583103161550714596978875606245995622290468228223475414703010019171623595405010598707841916695061830477779784607228511261974462274775582608",
        (14, 11): "125807841082286335713659771245120474438600187763754402900152516796599639764116651508088336000286819794486127861062908724565001123006971245684773793613883959849438977807821792228087310830706320695012568628263455520",
        (14, 10): "30578860317010907969279754299975698586429962666431924893006652635879501017578606971748149129437668961852835346072173219616176664622730521727684398180970180742173386326919877563644742890612468272575368119647580894095656",
        (14, 9): "1529885797129307784255372181028188986714792682929247269785905804564905014754241752663334140840807618869395882916467021668089078763511712557648752632881109514152572219286600901300828173662768766692472660209346618073907200000",
        (14, 8): "18872763516855551385927448286737668978313294102777046586150739195728894846466283031745440483386988019985567355871481325210953101815248268022158999956129750340501738002672423881221014923387881048690860675413435258320715776000000",
        (14, 7): "-1918837687886549660217326209879584500174320026907662546337160953285989625510043696207415420945605982180409001073972089603723195802976323517042836515884294955832721244293179104498115502921759450644781906381310713411928064000000000",
        (14, 6): "222898516305169955078653695014353049333123425232702687721342675358512925609182971452481349287770418400538281492957216156875992550492868600531510883030187688553856966360584470664460840381632845481724544604392054473877356544000000000000",
        (14, 5): "-1565007398927875268218027745649068266044476785835124491163140656328489021894880049021106033384585979430110112405275796973501916103441114091464515546348027943124104967961445631495266160717732799673224165282817006411198758912000000000000000",
        (14, 4): "3382310628523398763433860563634787833817145606969611583911345384664282392926430698223260522031295524388062800217128751234389651623604417801808245942057822039201284144264684612792340227916773670467756417227222252543532859392000000000000000000",
        (14, 3): "-3717173408567351931669982245190079988307384772579948182138496457464930927514138203776320021441297693915442418417959458071863763582789330839639112521360135361796694674633870980262020757136406451474775206637071876228850384896000000000000000000000",
        (14, 2): "2080966539044669354279547744691285341828540585625844034516423085515987908423766947521136451328376339344469789768140516204809612271108472902315757971920512582256935625766688560258121498209678510973693798357698946010445774848000000000000000000000000",
        (14, 1): "-59820808030983779578731318078126195886771305910051499994669822344667316642144878854469661757257055944622125697103579870005847472313028384662447678677672719440171842297826181187542376467714291804193580594761661457786470400000000000000000000000000000",
        (14, 0): "1062279257009095987693546452077170007475227227829136495711884103591909930049864422088070292418442651466914848377059771648172867026282539086870507841223212349652512133711945259925991412764216798627717411026836635959427072000000000000000000000000000000",
        (13, 13): "-1331613326970769922601937044403235155279111137912010397958453205760759367036784298518497759273711647021489103091015534310319219803033193115169064117319908071318956646937496753179602910731649439150811130772984",
        (13, 12): "3927488889074742949715588282033708807805574535309182733765416552538688846508000571272893498050232672773076302052864673553747400454580643743159456921834334371733114190351378783676390365686616171452380546286195678912",
        (13, 11): "218462464488946006500694760594363601165722144030690918984403577713774845795564451004521377357371901456880972018657314211893944497507619817721587091695437965322166801135277195978446290739370860620439053939124464769092464",
        (13, 10): "-74930627816753421564162045547169637680363132507251502156808541783177082292965129769078113607234654515913287013012247714395356417812049499315855232477994986386384818920639141087206458717924479693246362639765510544814309376000",
        (13, 9): "-916468138423223169569639802463507067304040033576942522828996768692006679289911631235061744921710114485281870928332288090041757468326300605581330510057214442645260336361045994596203861788258804752841328119403444870666256384000000",
        (13, 8): "35509204336758364847421188200902672611073655371809527215736755528544944352177957578997716131621600322678325372774928511137752947445757696301792345474281697680627110253017175121954089565229024446132748297889772368138751442944000000000",
        (13, 7): "-118088701053783525242594041851797470420788395899456124632117650138306079334078196032456868901503315013722374098075084709151979693990478234072628491744816480465258386230580092774003848033944401809244055610934265101624419549184000000000000",
        (13, 6): "-237329308692715707869915035067611973184858052999459826955464561312539808453106084779003782450416227312389425239067852014580983971428642218624296324180005087046994106014733708418022760532667977219493103821739603229099539038208000000000000000",
        (13, 5): "1400134856555295296202236528213342299062742891438510046222348966398744790178029751872503537678250719877616691345387413840608368828877955626551754364728071816278355305525693436028485464170643200054089538310598562357045612249088000000000000000000",
        (13, 4): "-3185850832151636087688511465152874269737022880341547372591231522115385758842485484908511368400458367400620670873387394598366635870449218078628873216549340400427701421985458925175095285745757669985409034748788222413309376200704000000000000000000000",
        (13, 3): "5171569506608441256796989022750473095723378493031374927605805608462663563148051295353478687001101499610483520271648078676588742462762473288201733105725835018425304695636988948933508732142546402859581782542449917516086522150912000000000000000000000000",
        (13, 2): "-5446553817404036814090471428212318948580957000465095179828382705367402893759215646578027778242839905175020213143845376786213691272910937330774627576686862506300053591556571636160746211818689184933131058935510971399195693416448000000000000000000000000000",
        (13, 1): "2750649861010742463674937086192880831641743654001352567876925581374162053604557596319462432160362938015942461809789283878550716531536684864238586988029699730886690006777535142195475472583867424703626375282844939676932395499520000000000000000000000000000000",
        (13, 0): "-22990329621475356780311934241477194475170857732396117422276390954796322198278602182639162746874364636806615813838147700426537598923460500323883609929955972392227708178081577603830653964227972061016018016766609557796706844672000000000000000000000000000000000",
        (12, 12): "2821039228606900255235135054535475558450572994864497105005890834637952582539817153553126515472242952290258688631344409655747233325421579009403383301179190331427845407630522425735279829637411268688805923487043496289024796",
        (12, 11): "-397142283314321221191088762627537767466101692301764155938833756770863406842922155152093008743139009839028106261885840542874605265368743993536230999906772310783571160166784022421416799283905995319809535656424888921120129024000",
        (12, 10): "80704350802990193937407977990073302009579527639852573031586348358863682585131621300525083491192378986452645351935175303875969013695151056244933878032681074459911958106101901308175289573678810327461130396681497249902674051072000000",
        (12, 9): "-2385212177323669894386232848166230868418699324407574357217064451556862165315713351260206774345423975962349751511616574210446042318408367885375996984093684934507307584342922942493464436322814575665673490236879955583840701906944000000000",
        (12, 8): "21791863720908533778933380624425649148086724656691347232165365767966202361119094981687032251200294467250287126944225229788865170150173530114069570153770731917744528675635940377556421203357266617675619327259635091650346590666752000000000000",
        (12, 7): "-70430731344312690823527053247309474737394281472735026821942235352698915374552958515978588168921569340059741512271218345688218076097063685578357959086461768415322040056922594179067696009736488859263188369430575458346995130826752000000000000000",
        (12, 6): "70655604464472559875175394060236339186719587564084573389037356316442113894069923062524268307994311215631684910708083378907014452094106428286262269770767853810607074354574636098014797971211519735209363056459782001790228598095872000000000000000000",
        (12, 5): "-174668547609749993894023321437708237323438334428734345413201580455787905131508944267749148170363531666819485466220581664731205204462222123032634259368162932972032297502532650455241870495957456549842693541729232706308417966309376000000000000000000000",
        (12, 4): "1436477111835244151715530973584252794889142194012806244266057570455890547099545977059477755220736288138060779774042993133131301043537263149678997398194305868685391626098152462111076032735394525181205934574975508352248788987936768000000000000000000000000",
        (12, 3): "-3171542676109373956175630723379928166146434787121790456608725308617200114244646819564941537278304323059217774124468737946912049800410321724317479494140542434031381489511924506507752017334148153517985337513633932769626527767724032000000000000000000000000000",
        (12, 2): "2986462504921973381217749445981395532397603321395248532059784855387061589297343120480801015495086091676136997082775985351337803253217585475126027115006234729654982943768474347203063354827371722479042729849612853500425206537125888000000000000000000000000000000",
        (12, 1): "-1872259195192145250573232232261968784405882451467383174049188379232509222641657372628536811514353906023209080420777317100837692311049411389795675814085907699302364641287375297463696050412746984083316461875312481626485795860774912000000000000000000000000000000000",
        (12, 0): "1000525222300822530817316629052217409220007405782403460672400884417395086436323357749469158863988660776806800563512281865878006445231506704681648946562227733976488287522174063502475653142052241862051744195841453268581715967737856000000000000000000000000000000000000",
        (11, 11): "-143356694537093077316718314868538188313093608877700926084873632968702662002439738824585702352439938105218850833795079379172429431853368904276126879418639524135451300211887530539480770644563217415332726009941190620085844180992000000",
        (11, 10): "4123363251093759606079271723407090030200745297144454901333469237897923339634487436247582897804234045223020346640494763448751204122750577217855424531177605268781348247597627189256680090496351743572218814894928165422560639451136000000000",
        (11, 9): "-8391401407027755736524168212348182965449442805320747938594373838814485565843965773151586004512361164635842020682294819501194864905228509257736001346787218461347833512635180334880284020079022463226919193607993716374067015057408000000000000",
        (11, 8): "-1130114481581048216975111109486172875016204078008621979280572362208213600273657139374870825550229502650630026941347317169990568768857202444393880549452380639761289720007421667565757765441109250117366362384145093990979376299114496000000000000000",
        (11, 7): "14554409718155530590251401057496552687445958783494014522486737723745922802465442865671343374365392532952623136716058509218802635224209701117745452502879331425060064131201636479509799727011401806686675435551193688128145583996141568000000000000000000",
        (11, 6): "-72613795239245002319594517205688347500673469299166081691892055754155181787855670684142898596883040998288527254928697467278506041112515371842302571331915270747659564066704175459454153130109056724905957429810897325377608989135601664000000000000000000000",
        (11, 5): "182262451902960550580290239195653360464852692887423494142937365642303164706396761747787925738182612098310558545363048435227282637751133577626324333593189965231581858073920255724567703344548674580210793906408949452135657677061619712000000000000000000000000",
        (11, 4): "-312867889114886369540213205019850438737057662406779716790219055358684258607615053552736115295675481286738714669623581607296857852946603151073397980272669391014726415610757960990440362321566339706568364594084952164653792595120488448000000000000000000000000000",
        (11, 3): "561385140560334143359154814108302996760450165122727495118363332971388687749683258329996598007321806339908158457759856965278517617423555420782940855621096107165187817684597117839104562641826763147257372857829581552876572480267878400000000000000000000000000000000",
        (11, 2): "-912018051767498704601297836787275266569843021905885248869069852960394378447402819012176204667954437401088330527649557378621432343151999508282200323534763492353761081980520690950949513144030760842627355898016667673964815634887868416000000000000000000000000000000000",
        (11, 1): "661431194316016145967699086600448270666546659371060564903282798183283840711127489879020161630799313068888738852989809803607749648613801138383168257161171289219268275917600682088589006776369321636967761237898048014880582109369466880000000000000000000000000000000000000",
        (11, 0): "-46637850510716312163101275251667158152479834340023264141053657025813955947479422933198190290122932844194317388332864365372672556793622596091599790664770176032127737606519108566903139727276206323262078689358681603575481570389131264000000000000000000000000000000000000000",
        (10, 10): "48829977679797397609425481720475493773969546953088739396743439838369271181811632434315036429348850237504846148878301298941666922851854090839845988354510115687552222238836632122363304083069995165864802962882918579896231852507136000000000000",
        (10, 9): "1783506459874320527405537087806368444593198049191750869838913646005422526365881310649479620774905957350605806385799882450897189783024476963506542364634434432846160501922662329069725360687095210310390476203963199561603862929342464000000000000000",
        (10, 8): "-10395845555894745432393965797803727515171494872164968061176659713819446230348544890182744126872931902810901707460341516332272504719594298558889109522320319103888697610810811664591064319119990710407960416080846339772207092237074432000000000000000000",
        (10, 7): "-372536450797537761574901224901938240436131426492952524205885307113216134031730992521351641610527681747626990031788109287445520638477186897317632882332831463892007834778146545228166128834349018899182630424691969058467065139598196736000000000000000000000",
        (10, 6): "4912171818674755791835955770133156720545261889265822726604104319380807987715726008662878073838809977225521007255992505121087904094853624643437509123082185775957222878411946540187993141673170327464232036092111430190036814813145858048000000000000000000000000",
        (10, 5): "-24101991787444782418748272541259364491900988465645168005851450838254146530083892003975129613375402979198375001412378895591204254978670450948981312967516576896326671896687925346520883326035396249893433215635762742784659323185501569024000000000000000000000000000",
        (10, 4): "65780097316298504129792546541250520947503833569924791802955809663542791774089925599317828844649784979873856608128226483203337127769122864344211792950114816504146444197527219677438216096314356838331894829931679942384473194039231905792000000000000000000000000000000",
        (10, 3): "-104935284955873766456587507368088544929416427901584184799726913424645213734753761657065020460046687248689677889248245226036226697931972782892090708420816735990834584914189678356712091055853011206864462895524812528282151548535854596096000000000000000000000000000000000",
        (10, 2): "79059770394250700728482895264369355708884767026798666193245355612424888646311179238553659589161854451939845665420784379453491817667244665650798700223971146208497525932462160171008787379903045638526987657259213578426743640777532899328000000000000000000000000000000000000",
        (10, 1): "-10911981467097406212903763497408269031882168657538971754020395268918154488480058271186190797291844720523385552654244772023847552527885454825101465665733699120729187017834907961494187035389025534600793477483124490825220241346592243712000000000000000000000000000000000000000",
        (10, 0): "1568833757351410670455804499923141580553193163863391764995525590151684185661364144659336176452630800915789047999834143344225940459640882677952953063088988517671146080212540177469717860720439624489926843952731067367062243918183661568000000000000000000000000000000000000000000",
        (9, 9): "9549533948658829870624150894003647882997307822968852921357777043253244735259575922062430259153115493427542604917780993992303301369223749576846642735805601660186752822319233719687084854468980782698585406393162016817730687518900224000000000000000000",
        (9, 8): "583820996599255776395038239701963916944129985554844912288563555474137063305191157847657976068281665605801543825564956968158957627813844897628405465993207235615309335458036153771083151407384514353670343068689234871611228479471747072000000000000000000000",
        (9, 7): "-9190785525047007889172954191959973257235393528876013881825942060072300642355720293528895305963800021922794509686092576759690040176293479173629636517413666579655403658373065776279192003377357593736436223134147736169235437994553376768000000000000000000000000",
        (9, 6): "14217605230279628133951967570118888760261586346499503770685112589710682504809777009795528483165144098962911781226805974828688658671553873263477277731115982204734084195893394089088420292148055509500433600769324295883834646893428736000000000000000000000000000000",
        (9, 5): "124452954117403878828210616646728621445760298534497780321432326450468328719526626565453602158186079118065138026082980856084791896441914309471444966182607492613117653205926766002909468526141361013666604240679429655409248052704358432768000000000000000000000000000000",
        (9, 4): "-267519763312437900145900837322992371259858350323716378595238918302792029882680845238357800101397135584264969565160977686948826913145610232441075885578153904079543426516387420140660211756933641292149686924463569663965155627525835063296000000000000000000000000000000000",
        (9, 3): "-111195201073995239463266117613860781251913272094887291093191053374551988332022434340577347680025100334341150374801060894354413859514540789118269576874819991865354439851988713746180040142839764586654834191961985756162825863857468080128000000000000000000000000000000000000",
        (9, 2): "560642665366639362835190307430348697112747345287731770941186960989068120443436716399122717770225956448652212582131143925859758518435714697883642563283640090533881713097598558530903944705737155009199388548264529643527931706131519373312000000000000000000000000000000000000000",
        (9, 1): "-472732041199351405011572629116797420271809934378149942898357472291019388040334215255846759114309088516015249599191770989037426199497422526654762921739815568467033531441223374345661078838345223612988501810073548059558714278227839287296000000000000000000000000000000000000000000",
        (9, 0): "-32442969336623484595603753093698410241296305614444329914722417019285168550375759663115671328972059154698935858565325808008026157107306227694668629083883041949219143771731349622066822598789992739722207791714655700474940942189315751936000000000000000000000000000000000000000000000",
        (8, 8): "20375689084737075193286802126947285181069535362532374813109968534339144427691582493351150847643331933583691603620912445119068711857354115717746332787537775341167092053591936089145106270925862806830598730374130243302494304560645931008000000000000000000000000",
        (8, 7): "-24010122381722017128620603118987850259644298871406888083574787609157359919437120367369264739216273749680218999981256550800453741742808343950161741171761193233543118636924076579947632836385943423035645132912044116460490241487889498112000000000000000000000000000",
        (8, 6): "-461550404486210740087286051419001080672219170010170227970385485339836080203309228382635717282039750505502831385976445038673653065543428240418273345743537249919249886634549874702868129334336214103820589010219115625606481561778915377152000000000000000000000000000000",
        (8, 5): "-182814553559606660601230522639267231196969835148358152137374040435648503497059653165940539977301042638644152228502927318059061113658311937092787359553918664471380751990589509374633777832317330260125062965375638829913708385482127179776000000000000000000000000000000000",
        (8, 4): "8951883151249693983209250759437542877843830837214900471151406658506818108381945610161143736777409111098137609212571645604044856535521623518851678389164834066420995959731557918850185778851198931355242561072373561363583223755440664870912000000000000000000000000000000000000",
        (8, 3): "-12319577051547787728513985512015838977196769765541862763247599093835713130957248127706574913168652775333648530293722480928928579257965056133135055557719799804593304744612156300777938079549435117801570951760742638833444110022753875132416000000000000000000000000000000000000000",
        (8, 2): "-3774226202281761426139395871642540023548935633623597651778323127933355689587549137450214706142206070005340411236762082325822533598676530795113171058071723339673239529901957532285724411834113860319319416339180998998071548108415453626368000000000000000000000000000000000000000000",
        (8, 1): "7963035267759873555749730377764193654045676989020259129227402118811427284455052346583081435735674811511595053092900328803085275274720943218108775858089872374722019197555788012774382866130497271096108358412751860345416503435272417968128000000000000000000000000000000000000000000000",
        (8, 0): "519515652901682220305929669995631049823410969926146722302986322286837908655171871126584249462204950540736335243278901813595860037015787801962229751477799937127700710937573949254027287259151561726202201526433310420513438980899805855744000000000000000000000000000000000000000000000000",
        (7, 7): "2026006659211321501534679166746194162272540101349454291026280335531828293905743722728964963321343911418633824030960538457672651564136840287756721346297639202524515860346787244007035547483856897002643588738902069708296486116013979467776000000000000000000000000000000",
        (7, 6): "3911248826412886281977569780812307778342211666638410340841170170075799348696428517116036064797088796698967441162120499453805701882997011538421310627078114187719510129970327741748466369414129441337545595561490079291872472763700860682240000000000000000000000000000000000",
        (7, 5): "-28875595028830076287891158337344941627073834876206004296410022279640024954590219948672136069243317397149931763091869283687493242749536613779532333614892908774376998961628309403010510847866041419888352619598816831922138382311889664212992000000000000000000000000000000000000",
        (7, 4): "2047282233434529500281601630209510037918099604431661743360762065390725200416764479972446554538541856337218927667238969986030474101975681305334187048928617516900118007723891587857916252964667348218387145344155478258337342240462617968640000000000000000000000000000000000000000",
        (7, 3): "106500083431977765989542109757675251267737983371475266962125266454118311233162850917370981854831655620498628940773471048692337990595656182445037715822838630917964636201008610964371285057098225515816299213463973352529179868955696047325184000000000000000000000000000000000000000000",
        (7, 2): "-52469551879339804510697139341851425330765812526560103912942957441376680103453966090985663280330529494316333986460010068262713871816433948966660276163529459843811585064277521607883949553911966124564032569563226907725461207836324056268800000000000000000000000000000000000000000000000",
        (7, 1): "-36508866424681754725736202617078346678171300336755150299201018862166179854933313385414780968302526816279088184195835769840094473854767905530518104705450967549684547035906210570639472454281768449382110911287576647129542081952368763600896000000000000000000000000000000000000000000000000",
        (7, 0): "-5722906440671874108895183731062827831004879962051609530359528861878075745593231233949533904374178557013105343473483307990304090058205798219968074308581031500781601000382953097973685502226674296081053461006749832679627162611576467357696000000000000000000000000000000000000000000000000000",
        (6, 6): "49866213127596132614379313447407147280334534959800574217592477741024053894710444296955569611842961069558738429900274892970710998756125572848054777817621739114174996193723984360796239223488598177376930533473529750135240346579737396641792000000000000000000000000000000000000",
        (6, 5): "36094049907551692663870032459903955001351100570513592722294494728820191571644753028142833159008884486176315960728740302112804771966445224102272961247583031107049405167339499306799128210246596197371595580633500176958603410238205979525120000000000000000000000000000000000000000",
        (6, 4): "-193128592752075048728787313060023977517823375892124476866080232640346176848702529443458499521408835720834455059263949953388332724455070398463167955388936872697793573384988961926712046405691557705509012839133773703724612368275627178983424000000000000000000000000000000000000000000",
        (6, 3): "-161653009968746703158536650754960497439932978287618779793558307041641483076343678091329073027133144755385363081153645144471897115560942431434851709354694988472934410086918080346390314558099580223469052494255142112484017394342972505456640000000000000000000000000000000000000000000000",
        (6, 2): "365022424514876997157296968250862888797435962472951826573483906963803572825050001248653630770257672357567709018408280996739541874622622457386423806163554115635612970159258271087682127329698326002866567048672830066772661494433309708517376000000000000000000000000000000000000000000000000",
        (6, 1): "11326097995613532001979757206499750979223612351239797653313206690965486361932903484458621470259980874416701390655355347292991055958255704368557217607956585070153893030691212165668424693364626075032943687857537117505669542556056745410560000000000000000000000000000000000000000000000000000",
        (6, 0): "47281570517690866244733758850795561868841979795432893306392986736961397228022894722754313013925005403398575113569562818552529932927600846067459418362034209131509654579138231670006814394444078557972275442209327421274567849207838416044032000000000000000000000000000000000000000000000000000000",
        (5, 5): "198842034090251581860420617928330729942967446386609417673819163746724538697930695123077629382266390306507120825417032464732517158197110162838803214725166480952269362511035214098538730706089578330113817684725378075183170530036093114384384000000000000000000000000000000000000000000",
        (5, 4): "253748382391814639301525930510074235933598598531469276954502931772130946758494480286634216080006155064121733184520367924011681468147261428601127822535170703890868874276934283727368548763699580303900731140441693010883382064331964788244480000000000000000000000000000000000000000000000",
        (5, 3): "-201238183097230966090224112683855156964957089552911138191761033643598462793554115832283664439356063600443450649107927310230469009527076275656144284599327197169773778141032500544793554045461704383772343410126980854255108835222558611603456000000000000000000000000000000000000000000000000",
        (5, 2): "-762722652887810473958216980363005326925087096364240017639182730082957899426774107389179373143894227916338229715442961589118170380948503875115436941788657841281300097674856723174334630704862403137763819139211997592995565153949798560169984000000000000000000000000000000000000000000000000000",
        (5, 1): "356471320229087959250737962998630723709174302537093272543057149191489562421951344954813108212518434420499575064633781554258737310393778913944011951284494221936697969414972964827737366463094448277653455225841004985425219915373421290061824000000000000000000000000000000000000000000000000000000",
        (5, 0): "-245402347923136776498253357224851731971460751458512252512753107482481102883166095778294325013270591402786914159471273870115063190734016329500381990832457207354362744656730585394665830534353642270506249428022678430942955443915557569560576000000000000000000000000000000000000000000000000000000000",
        (4, 4): "84771621028189440049406662944265690013868770800262296498416110265365380099002602703603629234038427285812996083440143124099158409510952293867959289327693157846883981248954713168706206952331884858799383643548851607326730175352125349953536000000000000000000000000000000000000000000000000",
        (4, 3): "297444568219121993000017570749641259306025391938638916414420652100955680515469717591284955896123396513722339620583601579131925727283894879856004793081488309007608120482492745340333502572352009264950748785668951361160435990256509748510720000000000000000000000000000000000000000000000000000",
        (4, 2): "758044703331100612500244592699844301911174927330718824063328825773629464292315713800010338880453680953741099972684845148073751486185564694650171476085501420558341583747389837266905749227082950361860086266033307059319294617014420962803712000000000000000000000000000000000000000000000000000000",
        (4, 1): "-1223077351038480684765415284739252935122858648492193761560710790242580832527200393309894669623286550057937586828889118311004677301684119133609264414556394115379472621462179638370159970088440452017388684962718871124943112610030907656503296000000000000000000000000000000000000000000000000000000000",
        (4, 0): "768821198562330185833189255404359447901507786192843899963551642264332484949576288320621509478125282445433601844097581112161092234457996122372302593874365608972033014081764670450581752027647588303727183092630722052565257072013493741289472000000000000000000000000000000000000000000000000000000000000",
        (3, 3): "329579555477216312242533644713290396099665487006302822539618867989839008371434669258852615480104760116537607356291344383498952479728191964330168296238042598955165356443871965028447780310457332750267398725005564907612335965589470611243008000000000000000000000000000000000000000000000000000000",
        (3, 2): "-1158808576905146037308489272739916641084895508172937454533984343819101200663404554059349450707830895912859170869906890034203566045182380827264949478987348378770442838380962605763672927729202147189215286845136270721996894496248579431071744000000000000000000000000000000000000000000000000000000000",
        (3, 1): "2262497160238780238427799060683935529064025820172870637301036415739598026162081737387924806478875466176853500027306184024845028370437141430830059502500990918191072769524078471935510988497814313882556544698932738304825597617688620960841728000000000000000000000000000000000000000000000000000000000000",
        (3, 0): "-1463047024480245979280241327376382226402725447866451159985871158335322488883414996963917894584348841183390380355979710070209391406238666414264459079662417406983213110833072141261564145648478809434648390789537581781713656991504165586862080000000000000000000000000000000000000000000000000000000000000000",
        (2, 2): "2478348560263605434869908353778237254555774296563117283066068717776656501842354202033956182147554206672861574385295290465273840515362115281786651824943332397563929239715660897547552149322537449657449923045189408164738180200212350252351488000000000000000000000000000000000000000000000000000000000000",
        (2, 1): "-3000222929472374210176297209910349503860028298610785892317108594511626471900603944644607318254005141957531322118001389224066515473128330065599148332886272500016481077214338988397078315002049011262033524727795414490633591069969127477084160000000000000000000000000000000000000000000000000000000000000000",
        (2, 0): "1661920890563146428612451321394996481221187788983281981076195383059984565611585477464566924955128742444108532356846784522660076606177096042695173873813319168703947719898690753489142195090731880019816601127164441820069716005124310300622848000000000000000000000000000000000000000000000000000000000000000000",
        (1, 1): "2632729430746913467686038239408995290285553771767908359446482944162427682068736365260581741206525632844679955579383090184821496554699288794136428075238135415298340004749522032054552554508067994567681396240932733465774942525235846623264768000000000000000000000000000000000000000000000000000000000000000000",
        (1, 0): "-1039617762024674503680997978467455535018161511701371192648348168700240649371063202240085585851547596581218725772274341614687477990995946244222972863553327891584052083271925796560611996152618352430736376816957107473365717196028771613802496000000000000000000000000000000000000000000000000000000000000000000000",
        (0, 0): "276317343458482050024954594091203954462778993425951865457896136264319154184012371702485247324561228395799542523144559678099151153031279063227215558163486037243049223898024024357449851921532301567109165384985345417301464008295203997745152000000000000000000000000000000000000000000000000000000000000000000000000",
    },
}
