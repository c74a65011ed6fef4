// Copyright 2026 The corpusdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Embedded reference data, transcribed verbatim from the published division
// tables for the LDC Arabic treebanks. Numbers and document names are kept
// exactly as printed, including the ".qtr" vs ".qrtr" suffix spellings;
// registry_selfcheck() re-verifies the arithmetic at runtime.

#include "corpusdiv/registry.hpp"

namespace corpusdiv {

const std::vector<ReferenceDivision>& reference_divisions() {
  static const std::vector<ReferenceDivision> rows = {
      {"10-80-10", "ATB1", DivisionLabel("DEV"), 71, 14635,
       "20000715_AFP_ARB.0001", "20000715_AFP_ARB.0073"},
      {"10-80-10", "ATB1", DivisionLabel("TRAIN"), 568, 116198,
       "20000715_AFP_ARB.0074", "20001115_AFP_ARB.0128"},
      {"10-80-10", "ATB1", DivisionLabel("TEST"), 95, 14553,
       "20001115_AFP_ARB.0129", "20001115_AFP_ARB.0236"},

      {"10-80-10", "ATB2", DivisionLabel("DEV"), 50, 14468,
       "UMAAH_UM.ARB_20010721-e.0018", "UMAAH_UM.ARB_20020217-a.0019"},
      {"10-80-10", "ATB2", DivisionLabel("TRAIN"), 400, 115147,
       "UMAAH_UM.ARB_20020224-a.0005", "UMAAH_UM.ARB_backissue_34-a.0013"},
      {"10-80-10", "ATB2", DivisionLabel("TEST"), 51, 14584,
       "UMAAH_UM.ARB_backissue_34-a.0014", "UMAAH_UM.ARB_backissue_40-e.0025"},

      {"10-80-10", "ATB3", DivisionLabel("DEV"), 58, 34033,
       "ANN20020115.0001", "ANN20020115.0110"},
      {"10-80-10", "ATB3", DivisionLabel("TRAIN"), 480, 271646,
       "ANN20020215.0001", "ANN20021115.0033"},
      {"10-80-10", "ATB3", DivisionLabel("TEST"), 61, 34031,
       "ANN20021115.0034", "ANN20021215.0045"},

      {"10-80-10", "ATB4", DivisionLabel("DEV"), 41, 16344,
       "ASB20040928.0001", "ASB20041003.0004"},
      {"10-80-10", "ATB4", DivisionLabel("TRAIN"), 315, 129310,
       "ASB20041003.0005", "ASB20041101.0001"},
      {"10-80-10", "ATB4", DivisionLabel("TEST"), 41, 16261,
       "ASB20041101.0002", "ASB20041104.0019"},

      {"10-80-10", "ATB5", DivisionLabel("DEV"), 3, 12442,
       "ALHURRA_NEWS10_ARB_20051127_100101", "ALHURRA_NEWS13_ARB_20051121_130100"},
      {"10-80-10", "ATB5", DivisionLabel("TRAIN"), 24, 77257,
       "ALHURRA_NEWS13_ARB_20051123_130100.qtr", "DUBAI_DUBAINews_ARB_20050223_113000"},
      {"10-80-10", "ATB5", DivisionLabel("TEST"), 4, 10927,
       "DUBAI_DUBAINews_ARB_20050228_113000", "DUBAI_DUBAINews_ARB_20051219_112801"},

      {"10-80-10", "ATB6/NW", DivisionLabel("DEV"), 13, 2910,
       "AAW_ARB_20080502.0027-S1", "AFP_ARB_20080510.0077-S1"},
      {"10-80-10", "ATB6/NW", DivisionLabel("TRAIN"), 96, 21738,
       "AFP_ARB_20080512.0051-S1", "QDS_ARB_20080517.0021-S1"},
      {"10-80-10", "ATB6/NW", DivisionLabel("TEST"), 13, 2836,
       "QDS_ARB_20080517.0046-S1", "XIN_ARB_20080522.0166-S1"},

      {"10-80-10", "ATB6/NG", DivisionLabel("DEV"), 4, 873,
       "arb-NG-2-76511-10666609-S1", "arb-NG-2-76513-10114621-S1"},
      {"10-80-10", "ATB6/NG", DivisionLabel("TRAIN"), 27, 6124,
       "arb-NG-2-76513-10667328-S1", "arb-NG-31-114370-10352403-S2"},
      {"10-80-10", "ATB6/NG", DivisionLabel("TEST"), 4, 1018,
       "arb-NG-95-174352-11045427-S1", "arb-NG-95-174357-11048231-S2"},

      {"10-80-10", "ATB6/WL", DivisionLabel("DEV"), 9, 1948,
       "arb-WL-1-152170-10153737-S2", "arb-WL-1-152350-10158443-S1"},
      {"10-80-10", "ATB6/WL", DivisionLabel("TRAIN"), 68, 15430,
       "arb-WL-1-152375-10682332-S1", "arb-WL-7-88414-10669660-S2"},
      {"10-80-10", "ATB6/WL", DivisionLabel("TEST"), 9, 2064,
       "arb-WL-7-88466-10669891-S1", "arb-WL-7-89199-10673129-S1"},

      {"10-80-10", "ATB7", DivisionLabel("DEV"), 1, 4052,
       "ALFAYHA_NEWS_ARB_20080401_210000", "ALFAYHA_NEWS_ARB_20080401_210000"},
      {"10-80-10", "ATB7", DivisionLabel("TRAIN"), 10, 25723,
       "ALHURRA_THEGLOBAL_ARB_20080118_210000", "SAWA_SAWANEWS_ARB_20080208_181500"},
      {"10-80-10", "ATB7", DivisionLabel("TEST"), 4, 4589,
       "SAWA_SAWANEWS_ARB_20080304_221500", "SAWA_SAWANEWS_ARB_20080307_221500"},

      {"10-80-10", "ATB8", DivisionLabel("DEV"), 2, 8109,
       "ABUDHABI_ABUDHNEWS2_ARB_20070228_000000.qrtr", "ABUDHABI_ABUDHNEWS_ARB_20070110_115800.qrtr"},
      {"10-80-10", "ATB8", DivisionLabel("TRAIN"), 12, 57750,
       "ABUDHABI_ABUDHNEWS_ARB_20070117_115800.qrtr", "ALHURRA_THEWORLD TODAY_ARB_20080208_170000"},
      {"10-80-10", "ATB8", DivisionLabel("TEST"), 4, 9275,
       "ALURDUNYA_URDUNYANEWS_ARB_20070312_000000.qrtr", "ARABIYA_ALARABIYANEWS2_ARB_20070312_000000.qrtr"},

      {"10-80-10", "ATB9", DivisionLabel("DEV"), 3, 10966,
       "ARABIYA_ALARABIYANEWS2_ARB_20070316_000000.qrtr", "ARABIYA_ALARABIYANEWS2_ARB_20080409_200000"},
      {"10-80-10", "ATB9", DivisionLabel("TRAIN"), 13, 53955,
       "ARABIYA_LATEHRNEWS_ARB_20070222_000000.qrtr", "SYRIANTV_NEWS25_ARB_20070122_162800.qrtr"},
      {"10-80-10", "ATB9", DivisionLabel("TEST"), 2, 12593,
       "SYRIANTV_NEWS25_ARB_20070129_162800.qrtr", "SYRIANTV_NEWS25_ARB_20070201_162801.qrtr"},

      {"10-80-10", "ATB10", DivisionLabel("DEV"), 1, 5972,
       "ALHURRA_THEGLOBAL_ARB_20080205_210000", "ALHURRA_THEGLOBAL_ARB_20080205_210000"},
      {"10-80-10", "ATB10", DivisionLabel("TRAIN"), 7, 30961,
       "ALJZ_TODHARV_ARB_20070107_145800.qrtr", "SAUDITV_SAUDINEWS2_ARB_20080326_190000"},
      {"10-80-10", "ATB10", DivisionLabel("TEST"), 1, 4462,
       "SAUDITV_SAUDINEWS2_ARB_20080402_200000", "SAUDITV_SAUDINEWS2_ARB_20080402_200000"},

      {"10-80-10", "ATB11", DivisionLabel("DEV"), 11, 4412,
       "ABDULEMAM_20041226.1648", "DIGRESSING_20041107.0106"},
      {"10-80-10", "ATB11", DivisionLabel("TRAIN"), 83, 30195,
       "DIGRESSING_20041109.0437", "TAREEKALSHAAB_20041114.1958"},
      {"10-80-10", "ATB11", DivisionLabel("TEST"), 11, 4080,
       "TAREEKALSHAAB_20041114.1959", "ZAYEDALSAIDI_20050221.1414"},

      {"10-80-10", "ATB12", DivisionLabel("DEV"), 3, 15470,
       "ABUDHABI_ABUDHNEWS_ARB_20070111_115801.qrtr", "ALAM_NEWSRPT_ARB_20070102_015800.qrtr"},
      {"10-80-10", "ATB12", DivisionLabel("TRAIN"), 25, 88367,
       "ALAM_NEWSRPT_ARB_20070111_015800.qrtr", "SCOLA_JORDNNSCO_ARB_20070308_095800.qrtr"},
      {"10-80-10", "ATB12", DivisionLabel("TEST"), 3, 12565,
       "SCOLA_SAUDNNSCO_ARB_20070222_215800.qrtr", "SYRIANTV_NEWS25_ARB_20070208_162800.qrtr"},

      {"10-80-10", "ARZ1", DivisionLabel("DEV"), 4, 3842,
       "bolt-arz-NG-169-181081-14577.arz.su", "bolt-arz-NG-169-181081-19026.arz.su"},
      {"10-80-10", "ARZ1", DivisionLabel("TRAIN"), 46, 28837,
       "bolt-arz-NG-169-181081-21390.arz.su", "bolt-arz-NG-169-181090-38942.arz.su"},
      {"10-80-10", "ARZ1", DivisionLabel("TEST"), 8, 4078,
       "bolt-arz-NG-169-181090-38993.arz.su", "bolt-arz-NG-169-181090-40037.arz.su"},

      {"10-80-10", "ARZ2", DivisionLabel("DEV"), 4, 3280,
       "bolt-arz-NG-169-181081-16222.arz.su", "bolt-arz-NG-169-181081-68225.arz.su"},
      {"10-80-10", "ARZ2", DivisionLabel("TRAIN"), 31, 22201,
       "bolt-arz-NG-169-181081-68287.arz.su", "bolt-arz-NG-169-181090-39607.arz.su"},
      {"10-80-10", "ARZ2", DivisionLabel("TEST"), 3, 3732,
       "bolt-arz-NG-169-181090-39695.arz.su", "bolt-arz-NG-169-181090-40322.arz.su"},

      {"10-80-10", "ARZ3", DivisionLabel("DEV"), 8, 3682,
       "bolt-arz-DF-175-182187-572764.arz.su", "bolt-arz-DF-175-182187-577973.arz.su"},
      {"10-80-10", "ARZ3", DivisionLabel("TRAIN"), 43, 24067,
       "bolt-arz-DF-175-182187-578399.arz.su", "bolt-arz-NG-169-181090-40341.arz.su"},
      {"10-80-10", "ARZ3", DivisionLabel("TEST"), 5, 3762,
       "bolt-arz-NG-169-181090-40504.arz.su", "bolt-arz-NG-169-181092-26920.arz.su"},

      {"10-80-10", "ARZ4", DivisionLabel("DEV"), 5, 6321,
       "bolt-arz-DF-175-182187-575959.arz.su", "bolt-arz-DF-175-182187-581488.arz.su"},
      {"10-80-10", "ARZ4", DivisionLabel("TRAIN"), 64, 30285,
       "bolt-arz-DF-175-182187-581658.arz.su", "bolt-arz-DF-175-182192-10963633.arz.su"},
      {"10-80-10", "ARZ4", DivisionLabel("TEST"), 7, 4855,
       "bolt-arz-DF-175-182258-1245345.arz.su", "bolt-arz-NG-169-181090-40249.arz.su"},

      {"10-80-10", "ARZ5", DivisionLabel("DEV"), 9, 4021,
       "bolt-arz-DF-169-181089-15751715.arz.su", "bolt-arz-DF-169-181091-8751442.arz.su"},
      {"10-80-10", "ARZ5", DivisionLabel("TRAIN"), 73, 28361,
       "bolt-arz-DF-175-182185-10963619.arz.su", "bolt-arz-DF-204-185979-1392879.arz.su"},
      {"10-80-10", "ARZ5", DivisionLabel("TEST"), 13, 4037,
       "bolt-arz-DF-204-185979-1393182.arz.su", "bolt-arz-NG-169-181081-72955.arz.su"},

      {"10-80-10", "ARZ6", DivisionLabel("DEV"), 19, 10542,
       "bolt-arz-DF-169-181090-8816189.arz.su", "bolt-arz-DF-175-182187-572570.arz.su"},
      {"10-80-10", "ARZ6", DivisionLabel("TRAIN"), 164, 77382,
       "bolt-arz-DF-175-182187-572693.arz.su", "bolt-arz-DF-207-186125-504972.arz.su"},
      {"10-80-10", "ARZ6", DivisionLabel("TEST"), 16, 10997,
       "bolt-arz-DF-207-186125-506363.arz.su", "bolt-arz-NG-169-181090-40862.arz.su"},

      {"10-80-10", "ARZ7", DivisionLabel("DEV"), 4, 6462,
       "bolt-arz-DF-175-182187-572367.arz.su", "bolt-arz-DF-175-182187-573032.arz.su"},
      {"10-80-10", "ARZ7", DivisionLabel("TRAIN"), 76, 47175,
       "bolt-arz-DF-175-182187-575718.arz.su", "bolt-arz-DF-210-186177-3027514.arz.su"},
      {"10-80-10", "ARZ7", DivisionLabel("TEST"), 13, 7475,
       "bolt-arz-DF-210-186206-3701939.arz.su", "bolt-arz-DF-217-194296-6676523.arz.su"},

      {"10-80-10", "ARZ8", DivisionLabel("DEV"), 15, 6895,
       "bolt-arz-DF-175-182187-572370.arz.su", "bolt-arz-DF-175-182188-1048352.arz.su"},
      {"10-80-10", "ARZ8", DivisionLabel("TRAIN"), 91, 51085,
       "bolt-arz-DF-175-182188-1048449.arz.su", "bolt-arz-DF-221-194675-6456787.arz.su"},
      {"10-80-10", "ARZ8", DivisionLabel("TEST"), 9, 7074,
       "bolt-arz-DF-221-194675-6456952.arz.su", "bolt-arz-DF-222-194704-7228783.arz.su"},

      {"10-80-10", "LEV", DivisionLabel("DEV"), 3, 3535,
       "fsa_16902", "fsa_16920"},
      {"10-80-10", "LEV", DivisionLabel("TRAIN"), 18, 20871,
       "fsa_16921", "fsa_17781"},
      {"10-80-10", "LEV", DivisionLabel("TEST"), 3, 3030,
       "fsa_17920", "fsa_18520"},

      {"zitouni", "ATB3", DivisionLabel("TRAIN"), 509, 288046,
       "ANN20020115.0001", "ANN20021015.0100"},
      {"zitouni", "ATB3", DivisionLabel("DEVTEST"), 90, 51664,
       "ANN20021015.0101", "ANN20021215.0045"},

      {"mada", "ATB1", DivisionLabel("TRAIN"), 734, 145386,
       "20000715_AFP_ARB.0001", "20001115_AFP_ARB.0236"},

      {"mada", "ATB2", DivisionLabel("TRAIN"), 501, 144199,
       "UMAAH_UM.ARB_20010721-e.0018", "UMAAH_UM.ARB_backissue_40-e.0025"},

      {"mada", "ATB3", DivisionLabel("TRAIN"), 509, 288046,
       "ANN20020115.0001", "ANN20021015.0100"},
      {"mada", "ATB3", DivisionLabel("DEV"), 45, 26359,
       "ANN20021015.0101", "ANN20021115.0066"},
      {"mada", "ATB3", DivisionLabel("TEST"), 45, 25305,
       "ANN20021115.0068", "ANN20021215.0045"},
  };
  return rows;
}

const std::vector<TreebankMeta>& treebank_metadata() {
  static const std::vector<TreebankMeta> meta = {
      {"ATB1", "4.1", "LDC2010T13"},
      {"ATB2", "3.1", "LDC2011T09"},
      {"ATB3", "3.2", "LDC2010T08"},
      {"ATB4", "1.0", "LDC2005T30"},
      {"ATB5", "1.0", "LDC2009E72"},
      {"ATB6", "1.0", "LDC2009E108"},
      {"ATB7", "1.0", "LDC2009E114"},
      {"ATB8", "1.0", "LDC2010E11"},
      {"ATB9", "1.0", "LDC2010E19"},
      {"ATB10", "1.0", "LDC2010E22"},
      {"ATB11", "1.0", "LDC2011E16"},
      {"ATB12", "1.0", "LDC2011E17"},
      {"ARZ1", "2.0", "LDC2012E93"},
      {"ARZ2", "2.0", "LDC2012E98"},
      {"ARZ3", "2.0", "LDC2012E89"},
      {"ARZ4", "2.0", "LDC2012E99"},
      {"ARZ5", "2.0", "LDC2012E107"},
      {"ARZ6", "2.0", "LDC2012E125"},
      {"ARZ7", "2.0", "LDC2013E12"},
      {"ARZ8", "2.0", "LDC2013E21"},
      {"LEV", "2.0", "LDC2005E78"},
  };
  return meta;
}

}  // namespace corpusdiv
