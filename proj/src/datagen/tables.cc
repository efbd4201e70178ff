// Copyright 2026 The MDM Link Prediction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdm/datagen/tables.h"

namespace mdm::datagen {

namespace {

const WeightedValue kSurnames[] = {
    {"SMITH", 2442977}, {"JOHNSON", 1483125}, {"WILLIAMS", 1107623}, {"BROWN", 900401},
    {"JONES", 766763}, {"GARCIA", 672435}, {"MILLER", 601795}, {"DAVIS", 546631},
    {"RODRIGUEZ", 502186}, {"MARTINEZ", 465500}, {"HERNANDEZ", 434627}, {"LOPEZ", 408234},
    {"GONZALEZ", 385372}, {"WILSON", 365348}, {"ANDERSON", 347643}, {"THOMAS", 331859},
    {"TAYLOR", 317685}, {"MOORE", 304876}, {"JACKSON", 293236}, {"MARTIN", 282604},
    {"LEE", 272848}, {"PEREZ", 263861}, {"THOMPSON", 255550},
    {"HARRIS", 240659}, {"SANCHEZ", 233958}, {"CLARK", 227687}, {"RAMIREZ", 221802},
    {"LEWIS", 216268}, {"ROBINSON", 211053}, {"WALKER", 206129}, {"YOUNG", 201470},
    {"ALLEN", 197056}, {"KING", 192866}, {"WRIGHT", 188882}, {"SCOTT", 185089},
    {"TORRES", 181474}, {"NGUYEN", 178023}, {"HILL", 174724}, {"FLORES", 171568},
    {"GREEN", 168545}, {"ADAMS", 165646}, {"NELSON", 162863}, {"BAKER", 160189},
    {"HALL", 157618}, {"RIVERA", 155144}, {"CAMPBELL", 152760}, {"MITCHELL", 150462},
    {"CARTER", 148244}, {"ROBERTS", 146104}, {"GOMEZ", 144035}, {"PHILLIPS", 142036},
    {"EVANS", 140101}, {"TURNER", 138228}, {"DIAZ", 136414}, {"PARKER", 134655},
    {"CRUZ", 132950}, {"EDWARDS", 131296}, {"COLLINS", 129690}, {"REYES", 128130},
    {"STEWART", 126614}, {"MORRIS", 125140}, {"MORALES", 123707}, {"MURPHY", 122312},
    {"COOK", 120954}, {"ROGERS", 119632}, {"GUTIERREZ", 118344}, {"ORTIZ", 117088},
    {"MORGAN", 115864}, {"COOPER", 114670}, {"PETERSON", 113505}, {"BAILEY", 112367},
    {"REED", 111257}, {"KELLY", 110172}, {"HOWARD", 109113}, {"RAMOS", 108077}, {"KIM", 107065},
    {"COX", 106075}, {"WARD", 105106}, {"RICHARDSON", 104158}, {"WATSON", 103231},
    {"BROOKS", 102323}, {"CHAVEZ", 101434}, {"WOOD", 100563}, {"JAMES", 99710},
    {"BENNETT", 98874}, {"GRAY", 98054}, {"MENDOZA", 97251}, {"RUIZ", 96463}, {"HUGHES", 95690},
    {"PRICE", 94931}, {"ALVAREZ", 94187}, {"CASTILLO", 93457}, {"SANDERS", 92740},
    {"PATEL", 92036}, {"MYERS", 91345}, {"LONG", 90666}, {"ROSS", 89999}, {"FOSTER", 89343},
    {"JIMENEZ", 88699}, {"POWELL", 88066}, {"JENKINS", 87443}, {"PERRY", 86831},
    {"RUSSELL", 86229}, {"SULLIVAN", 85637}, {"BELL", 85055}, {"COLEMAN", 84482},
    {"BUTLER", 83918}, {"HENDERSON", 83363}, {"BARNES", 82816}, {"GONZALES", 82279},
    {"FISHER", 81749}, {"VASQUEZ", 81227}, {"SIMMONS", 80714}, {"ROMERO", 80208},
    {"JORDAN", 79709}, {"PATTERSON", 79218}, {"ALEXANDER", 78734}, {"HAMILTON", 78257},
    {"GRAHAM", 77787}, {"REYNOLDS", 77324}, {"GRIFFIN", 76867}, {"WALLACE", 76417},
    {"MORENO", 75972}, {"WEST", 75534}, {"COLE", 75102}, {"HAYES", 74676}, {"BRYANT", 74255},
    {"HERRERA", 73841}, {"GIBSON", 73431}, {"ELLIS", 73027}, {"TRAN", 72628}, {"MEDINA", 72235},
    {"AGUILAR", 71846}, {"STEVENS", 71463}, {"MURRAY", 71084}, {"FORD", 70710},
    {"CASTRO", 70341}, {"MARSHALL", 69976}, {"OWENS", 69616}, {"HARRISON", 69260},
    {"FERNANDEZ", 68908}, {"MCDONALD", 68561}, {"WOODS", 68218}, {"WASHINGTON", 67879},
    {"KENNEDY", 67544}, {"WELLS", 67213}, {"VARGAS", 66885}, {"HENRY", 66562}, {"CHEN", 66242},
    {"FREEMAN", 65926}, {"WEBB", 65613}, {"TUCKER", 65304}, {"GUZMAN", 64999}, {"BURNS", 64696},
    {"CRAWFORD", 64398}, {"OLSON", 64102}, {"SIMPSON", 63810}, {"PORTER", 63520},
    {"HUNTER", 63234}, {"GORDON", 62951}, {"MENDEZ", 62671}, {"SILVA", 62394}, {"SHAW", 62120},
    {"SNYDER", 61849}, {"MASON", 61580}, {"DIXON", 61315}, {"MUNOZ", 61052}, {"HUNT", 60791},
    {"HICKS", 60534}, {"HOLMES", 60278}, {"PALMER", 60026}, {"WAGNER", 59776},
    {"ROBERTSON", 59283}, {"BOYD", 59041}, {"ROSE", 58800}, {"STONE", 58562},
    {"SALAZAR", 58326}, {"FOX", 58093}, {"WARREN", 57862}, {"MILLS", 57633}, {"MEYER", 57406},
    {"RICE", 57181}, {"SCHMIDT", 56958}, {"GARZA", 56737}, {"DANIELS", 56519},
    {"FERGUSON", 56302}, {"NICHOLS", 56088}, {"STEPHENS", 55875}, {"SOTO", 55664},
    {"WEAVER", 55455}, {"RYAN", 55248}, {"GARDNER", 55043}, {"PAYNE", 54840}, {"GRANT", 54638},
    {"DUNN", 54438}, {"KELLEY", 54240}, {"SPENCER", 54044}, {"HAWKINS", 53849},
    {"ARNOLD", 53656}, {"PIERCE", 53465}, {"VAZQUEZ", 53275}, {"HANSEN", 53087},
    {"PETERS", 52900}, {"SANTOS", 52715}, {"HART", 52532}, {"BRADLEY", 52350},
    {"KNIGHT", 52169}, {"ELLIOTT", 51990}, {"CUNNINGHAM", 51813}, {"DUNCAN", 51637},
    {"ARMSTRONG", 51462}, {"HUDSON", 51289}, {"CARROLL", 51117}, {"LANE", 50946},
    {"RILEY", 50777}, {"ANDREWS", 50609}, {"ALVARADO", 50443}, {"RAY", 50278},
    {"DELGADO", 50114}, {"BERRY", 49951}, {"PERKINS", 49790}, {"HOFFMAN", 49630},
    {"JOHNSTON", 49471}, {"MATTHEWS", 49313}, {"PENA", 49156}, {"RICHARDS", 49001},
    {"CONTRERAS", 48847}, {"WILLIS", 48694}, {"CARPENTER", 48542}, {"LAWRENCE", 48391},
    {"SANDOVAL", 48242},
};

const WeightedValue kFemaleGivenNames[] = {
    {"MARY", 3196000}, {"PATRICIA", 1773092}, {"JENNIFER", 1256185}, {"LINDA", 983684},
    {"ELIZABETH", 813734}, {"BARBARA", 696912}, {"SUSAN", 611327}, {"JESSICA", 545733},
    {"SARAH", 493743}, {"KAREN", 451447}, {"LISA", 416316}, {"NANCY", 386636},
    {"BETTY", 361206}, {"MARGARET", 339155}, {"SANDRA", 319837}, {"ASHLEY", 302764},
    {"KIMBERLY", 287558}, {"EMILY", 273921}, {"DONNA", 261617}, {"MICHELLE", 250456},
    {"CAROL", 240282}, {"AMANDA", 230966}, {"DOROTHY", 222402}, {"MELISSA", 214500},
    {"DEBORAH", 207185}, {"STEPHANIE", 200392}, {"REBECCA", 194065}, {"SHARON", 188158},
    {"LAURA", 182628}, {"CYNTHIA", 177441}, {"KATHLEEN", 172564}, {"AMY", 167969},
    {"ANGELA", 163633}, {"SHIRLEY", 159533}, {"ANNA", 155650}, {"BRENDA", 151967},
    {"PAMELA", 148469}, {"EMMA", 145141}, {"NICOLE", 141972}, {"HELEN", 138949},
    {"SAMANTHA", 136063}, {"KATHERINE", 133305}, {"CHRISTINE", 130665}, {"DEBRA", 128136},
    {"RACHEL", 125712}, {"CAROLYN", 123385}, {"JANET", 121150}, {"CATHERINE", 119001},
    {"MARIA", 116934}, {"HEATHER", 114943}, {"DIANE", 113024}, {"RUTH", 111174},
    {"JULIE", 109389}, {"OLIVIA", 107664}, {"JOYCE", 105998}, {"VIRGINIA", 104387},
    {"VICTORIA", 102828}, {"KELLY", 101319}, {"LAUREN", 99858}, {"CHRISTINA", 98441},
    {"JOAN", 97068}, {"EVELYN", 95736}, {"JUDITH", 94442}, {"MEGAN", 93187}, {"ANDREA", 91967},
    {"CHERYL", 90781}, {"HANNAH", 89628}, {"JACQUELINE", 88506}, {"MARTHA", 87415},
    {"GLORIA", 86352}, {"TERESA", 85317}, {"ANN", 84309}, {"SARA", 83326}, {"MADISON", 82368},
    {"FRANCES", 81434}, {"KATHRYN", 80522}, {"JANICE", 79632}, {"JEAN", 78764},
    {"ABIGAIL", 77915}, {"ALICE", 77087}, {"JULIA", 76277}, {"JUDY", 75486}, {"SOPHIA", 74712},
    {"GRACE", 73955}, {"DENISE", 73215}, {"AMBER", 72491}, {"DORIS", 71782}, {"MARILYN", 71088},
    {"DANIELLE", 70409}, {"BEVERLY", 69743}, {"ISABELLA", 69091}, {"THERESA", 68452},
    {"DIANA", 67826}, {"NATALIE", 67212}, {"BRITTANY", 66610}, {"CHARLOTTE", 66020},
    {"MARIE", 65441}, {"KAYLA", 64873}, {"ALEXIS", 64316}, {"LORI", 63769},
};

const WeightedValue kMaleGivenNames[] = {
    {"JAMES", 4840000}, {"ROBERT", 2685158}, {"JOHN", 1902358}, {"MICHAEL", 1489685},
    {"DAVID", 1232313}, {"WILLIAM", 1055399}, {"RICHARD", 925789}, {"JOSEPH", 826454},
    {"THOMAS", 747720}, {"CHARLES", 683668}, {"CHRISTOPHER", 630466}, {"DANIEL", 585519},
    {"MATTHEW", 547008}, {"ANTHONY", 513614}, {"MARK", 484359}, {"DONALD", 458504},
    {"STEVEN", 435476}, {"PAUL", 414824}, {"ANDREW", 396191}, {"JOSHUA", 379289},
    {"KENNETH", 363881}, {"KEVIN", 349773}, {"BRIAN", 336804}, {"GEORGE", 324837},
    {"TIMOTHY", 313759}, {"RONALD", 303472}, {"EDWARD", 293891}, {"JASON", 284945},
    {"JEFFREY", 276571}, {"RYAN", 268715}, {"JACOB", 261329}, {"GARY", 254371},
    {"NICHOLAS", 247804}, {"ERIC", 241595}, {"JONATHAN", 235715}, {"STEPHEN", 230138},
    {"LARRY", 224840}, {"JUSTIN", 219801}, {"SCOTT", 215001}, {"BRANDON", 210424},
    {"BENJAMIN", 206053}, {"SAMUEL", 201875}, {"GREGORY", 197878}, {"ALEXANDER", 194049},
    {"FRANK", 190377}, {"PATRICK", 186853}, {"RAYMOND", 183469}, {"JACK", 180215},
    {"DENNIS", 177084}, {"JERRY", 174069}, {"TYLER", 171163}, {"AARON", 168361},
    {"JOSE", 165657}, {"ADAM", 163046}, {"NATHAN", 160523}, {"HENRY", 158083},
    {"DOUGLAS", 155723}, {"ZACHARY", 153438}, {"PETER", 151224}, {"KYLE", 149079},
    {"ETHAN", 146999}, {"WALTER", 144981}, {"NOAH", 143023}, {"JEREMY", 141121},
    {"CHRISTIAN", 139274}, {"KEITH", 137478}, {"ROGER", 135732}, {"TERRY", 134033},
    {"GERALD", 132380}, {"HAROLD", 130771}, {"SEAN", 129204}, {"AUSTIN", 127677},
    {"CARL", 126189}, {"ARTHUR", 124738}, {"LAWRENCE", 123323}, {"DYLAN", 121942},
    {"JESSE", 120595}, {"JORDAN", 119279}, {"BRYAN", 117995}, {"BILLY", 116740},
    {"JOE", 115514}, {"BRUCE", 114315}, {"GABRIEL", 113143}, {"LOGAN", 111997},
    {"ALBERT", 110876}, {"WILLIE", 109780}, {"ALAN", 108706}, {"JUAN", 107655},
    {"WAYNE", 106626}, {"ELIJAH", 105618}, {"RANDY", 104631}, {"ROY", 103663},
    {"VINCENT", 102715}, {"RALPH", 101786}, {"EUGENE", 100874}, {"RUSSELL", 99980},
    {"BOBBY", 99104}, {"MASON", 98243}, {"PHILIP", 97399}, {"LOUIS", 96571},
};

const WeightedValue kStreetNames[] = {
    {"MAIN", 1000}, {"OAK", 707}, {"PINE", 577}, {"MAPLE", 500}, {"CEDAR", 447}, {"ELM", 408},
    {"WASHINGTON", 378}, {"LAKE", 354}, {"HILL", 333}, {"PARK", 316}, {"WALNUT", 302},
    {"SUNSET", 289}, {"LINCOLN", 277}, {"JACKSON", 267}, {"CHURCH", 258}, {"RIVER", 250},
    {"MEADOW", 243}, {"FOREST", 236}, {"HIGHLAND", 229}, {"MILL", 224}, {"SPRING", 218},
    {"CHESTNUT", 213}, {"DOGWOOD", 209}, {"WILLOW", 204}, {"JEFFERSON", 200}, {"FRANKLIN", 196},
    {"MADISON", 192}, {"CENTER", 189}, {"VALLEY", 186}, {"RIDGE", 183}, {"COTTAGE", 180},
    {"LAUREL", 177}, {"PROSPECT", 174}, {"ASH", 171}, {"HICKORY", 169}, {"BIRCH", 167},
    {"ORCHARD", 164}, {"CHERRY", 162}, {"SPRUCE", 160}, {"HOLLY", 158},
};

const WeightedValue kEmployers[] = {
    {"WALMART", 2300}, {"AMAZON", 1500}, {"FEDEX", 600}, {"KROGER", 465}, {"HOME DEPOT", 500},
    {"UNITED PARCEL SERVICE", 540}, {"TARGET", 450}, {"BERKSHIRE HATHAWAY", 380},
    {"WALGREENS", 330}, {"CVS HEALTH", 300}, {"LOWES", 300}, {"JPMORGAN CHASE", 256},
    {"IBM", 350}, {"GENERAL ELECTRIC", 205}, {"WELLS FARGO", 260}, {"BANK OF AMERICA", 210},
    {"JOHNSON CONTROLS", 105}, {"PEPSICO", 267}, {"COMCAST", 190}, {"ACCENTURE", 500},
    {"MICROSOFT", 160}, {"APPLE", 147}, {"ALPHABET", 135}, {"INTEL", 110}, {"ORACLE", 132},
    {"DELL TECHNOLOGIES", 165}, {"VERIZON", 135}, {"AT&T", 230}, {"BOEING", 141},
    {"LOCKHEED MARTIN", 114}, {"PROCTER & GAMBLE", 99}, {"GENERAL MOTORS", 164},
    {"FORD MOTOR", 190}, {"TYSON FOODS", 141}, {"MARRIOTT", 174}, {"STARBUCKS", 349},
    {"MCDONALDS", 200}, {"COSTCO", 273}, {"ALLSTATE", 46}, {"PFIZER", 79}, {"MERCK", 68},
    {"CISCO", 79}, {"CITY HOSPITAL", 120}, {"PUBLIC SCHOOL DISTRICT", 300},
    {"STATE UNIVERSITY", 150}, {"COUNTY GOVERNMENT", 180}, {"SELF EMPLOYED", 400},
    {"US POSTAL SERVICE", 500},
};

const City kCities[] = {
    {"NEW YORK", "NY", "100", "212", 8336},
    {"LOS ANGELES", "CA", "900", "213", 3979},
    {"CHICAGO", "IL", "606", "312", 2693},
    {"HOUSTON", "TX", "770", "713", 2320},
    {"PHOENIX", "AZ", "850", "602", 1680},
    {"PHILADELPHIA", "PA", "191", "215", 1584},
    {"SAN ANTONIO", "TX", "782", "210", 1547},
    {"SAN DIEGO", "CA", "921", "619", 1423},
    {"DALLAS", "TX", "752", "214", 1343},
    {"SAN JOSE", "CA", "951", "408", 1021},
    {"AUSTIN", "TX", "787", "512", 978},
    {"JACKSONVILLE", "FL", "322", "904", 911},
    {"FORT WORTH", "TX", "761", "817", 909},
    {"COLUMBUS", "OH", "432", "614", 898},
    {"CHARLOTTE", "NC", "282", "704", 885},
    {"SAN FRANCISCO", "CA", "941", "415", 881},
    {"INDIANAPOLIS", "IN", "462", "317", 876},
    {"SEATTLE", "WA", "981", "206", 753},
    {"DENVER", "CO", "802", "303", 727},
    {"WASHINGTON", "DC", "200", "202", 705},
    {"BOSTON", "MA", "021", "617", 692},
    {"EL PASO", "TX", "799", "915", 681},
    {"NASHVILLE", "TN", "372", "615", 670},
    {"DETROIT", "MI", "482", "313", 670},
    {"OKLAHOMA CITY", "OK", "731", "405", 655},
    {"PORTLAND", "OR", "972", "503", 654},
    {"LAS VEGAS", "NV", "891", "702", 651},
    {"MEMPHIS", "TN", "381", "901", 651},
    {"LOUISVILLE", "KY", "402", "502", 617},
    {"BALTIMORE", "MD", "212", "410", 593},
    {"MILWAUKEE", "WI", "532", "414", 590},
    {"ALBUQUERQUE", "NM", "871", "505", 560},
    {"TUCSON", "AZ", "857", "520", 548},
    {"FRESNO", "CA", "937", "559", 531},
    {"MESA", "AZ", "852", "480", 518},
    {"SACRAMENTO", "CA", "958", "916", 513},
    {"ATLANTA", "GA", "303", "404", 506},
    {"KANSAS CITY", "MO", "641", "816", 495},
    {"COLORADO SPRINGS", "CO", "809", "719", 478},
    {"OMAHA", "NE", "681", "402", 478},
    {"RALEIGH", "NC", "276", "919", 474},
    {"MIAMI", "FL", "331", "305", 467},
    {"LONG BEACH", "CA", "908", "562", 462},
    {"VIRGINIA BEACH", "VA", "234", "757", 449},
    {"OAKLAND", "CA", "946", "510", 433},
    {"MINNEAPOLIS", "MN", "554", "612", 429},
    {"TULSA", "OK", "741", "918", 401},
    {"TAMPA", "FL", "336", "813", 399},
    {"ARLINGTON", "TX", "760", "817", 398},
    {"NEW ORLEANS", "LA", "701", "504", 390},
};

const Nickname kNicknames[] = {
    {"KATE", "CATHERINE"},
    {"KATHY", "CATHERINE"},
    {"CATHY", "CATHERINE"},
    {"KATE", "KATHERINE"},
    {"KATIE", "KATHERINE"},
    {"KAT", "KATHERINE"},
    {"LIZ", "ELIZABETH"},
    {"BETH", "ELIZABETH"},
    {"BETTY", "ELIZABETH"},
    {"LIZZIE", "ELIZABETH"},
    {"PEGGY", "MARGARET"},
    {"MAGGIE", "MARGARET"},
    {"MEG", "MARGARET"},
    {"PATTY", "PATRICIA"},
    {"TRISH", "PATRICIA"},
    {"PAT", "PATRICIA"},
    {"JEN", "JENNIFER"},
    {"JENNY", "JENNIFER"},
    {"SUE", "SUSAN"},
    {"SUSIE", "SUSAN"},
    {"BARB", "BARBARA"},
    {"BARBIE", "BARBARA"},
    {"DEB", "DEBORAH"},
    {"DEBBIE", "DEBORAH"},
    {"DEBBIE", "DEBRA"},
    {"CINDY", "CYNTHIA"},
    {"MANDY", "AMANDA"},
    {"ABBY", "ABIGAIL"},
    {"BECKY", "REBECCA"},
    {"VICKY", "VICTORIA"},
    {"TORI", "VICTORIA"},
    {"SAM", "SAMANTHA"},
    {"SAMMY", "SAMANTHA"},
    {"CHRIS", "CHRISTINE"},
    {"TINA", "CHRISTINE"},
    {"TINA", "CHRISTINA"},
    {"JACKIE", "JACQUELINE"},
    {"KIM", "KIMBERLY"},
    {"PAM", "PAMELA"},
    {"SANDY", "SANDRA"},
    {"JUDY", "JUDITH"},
    {"DOT", "DOROTHY"},
    {"DOTTIE", "DOROTHY"},
    {"TESS", "THERESA"},
    {"TERRI", "THERESA"},
    {"TERRI", "TERESA"},
    {"SHELLY", "MICHELLE"},
    {"ALEX", "ALEXANDRA"},
    {"BILL", "WILLIAM"},
    {"WILL", "WILLIAM"},
    {"BILLY", "WILLIAM"},
    {"LIAM", "WILLIAM"},
    {"BOB", "ROBERT"},
    {"ROB", "ROBERT"},
    {"BOBBY", "ROBERT"},
    {"ROBBIE", "ROBERT"},
    {"RICK", "RICHARD"},
    {"RICH", "RICHARD"},
    {"DICK", "RICHARD"},
    {"JIM", "JAMES"},
    {"JIMMY", "JAMES"},
    {"JAMIE", "JAMES"},
    {"MIKE", "MICHAEL"},
    {"MICKEY", "MICHAEL"},
    {"DAVE", "DAVID"},
    {"TOM", "THOMAS"},
    {"TOMMY", "THOMAS"},
    {"CHRIS", "CHRISTOPHER"},
    {"TOPHER", "CHRISTOPHER"},
    {"JOE", "JOSEPH"},
    {"JOEY", "JOSEPH"},
    {"DAN", "DANIEL"},
    {"DANNY", "DANIEL"},
    {"MATT", "MATTHEW"},
    {"TONY", "ANTHONY"},
    {"STEVE", "STEVEN"},
    {"STEVE", "STEPHEN"},
    {"ANDY", "ANDREW"},
    {"DREW", "ANDREW"},
    {"JOSH", "JOSHUA"},
    {"BEN", "BENJAMIN"},
    {"BENNY", "BENJAMIN"},
    {"SAMMY", "SAMUEL"},
    {"NICK", "NICHOLAS"},
    {"TED", "EDWARD"},
    {"EDDIE", "EDWARD"},
    {"ALEX", "ALEXANDER"},
    {"XANDER", "ALEXANDER"},
    {"GREG", "GREGORY"},
    {"LARRY", "LAWRENCE"},
    {"JERRY", "GERALD"},
    {"KEN", "KENNETH"},
    {"KENNY", "KENNETH"},
    {"RON", "RONALD"},
    {"RONNIE", "RONALD"},
    {"DON", "DONALD"},
    {"DONNIE", "DONALD"},
    {"TIM", "TIMOTHY"},
    {"TIMMY", "TIMOTHY"},
    {"JEFF", "JEFFREY"},
    {"JON", "JONATHAN"},
    {"NATE", "NATHAN"},
    {"ZACH", "ZACHARY"},
    {"PETE", "PETER"},
    {"PAT", "PATRICK"},
    {"RAY", "RAYMOND"},
    {"DOUG", "DOUGLAS"},
    {"PHIL", "PHILIP"},
    {"GENE", "EUGENE"},
    {"VINCE", "VINCENT"},
    {"BERT", "ALBERT"},
    {"ART", "ARTHUR"},
    {"HAL", "HAROLD"},
    {"CHARLIE", "CHARLES"},
    {"CHUCK", "CHARLES"},
    {"FRANKIE", "FRANK"},
    {"WALT", "WALTER"},
    {"JAKE", "JACOB"},
    {"BRI", "BRIAN"},
    {"GABE", "GABRIEL"},
    {"LOU", "LOUIS"},
};

const StreetSuffix kSuffixes[] = {
    {"STREET", "ST"}, {"AVENUE", "AVE"}, {"ROAD", "RD"}, {"DRIVE", "DR"},
    {"LANE", "LN"},   {"COURT", "CT"},   {"BOULEVARD", "BLVD"}, {"PLACE", "PL"},
};

const char* const kEmailDomains[] = {"gmail.com", "yahoo.com", "outlook.com",
                                     "aol.com",   "icloud.com", "hotmail.com"};

}  // namespace

std::span<const WeightedValue> surnames() { return kSurnames; }
std::span<const WeightedValue> female_given_names() { return kFemaleGivenNames; }
std::span<const WeightedValue> male_given_names() { return kMaleGivenNames; }
std::span<const WeightedValue> street_names() { return kStreetNames; }
std::span<const WeightedValue> employers() { return kEmployers; }
std::span<const City> cities() { return kCities; }
std::span<const Nickname> nicknames() { return kNicknames; }
std::span<const StreetSuffix> street_suffixes() { return kSuffixes; }
std::span<const char* const> email_domains() { return kEmailDomains; }

std::vector<std::string_view> nicknames_of(std::string_view canonical) {
  std::vector<std::string_view> out;
  for (const auto& n : kNicknames) {
    if (canonical == n.canonical) out.emplace_back(n.nickname);
  }
  return out;
}

std::vector<std::string_view> canonical_names_of(std::string_view given_name) {
  std::vector<std::string_view> out;
  for (const auto& n : kNicknames) {
    if (given_name == n.nickname) out.emplace_back(n.canonical);
  }
  if (out.empty()) out.push_back(given_name);
  return out;
}

}  // namespace mdm::datagen
