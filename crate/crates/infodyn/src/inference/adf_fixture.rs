const ADF_SERIES: [f64; 60] = [0.0, -1.8692509416647929, -0.32654255780091357, 1.2434705747552735, 1.4408742826752567, 1.6021769250421036, 0.8253336574583517, -0.25132731461568975, -0.27040730640630894, 0.7678849360738165, -0.21084375611002715, -0.4013260301862326, 1.4687387255117312, -0.1649466492982089, -1.2334983812476832, -1.8656354189968904, -0.836742798612484, -0.8477770763307746, -1.322295367151204, -1.6031773740927675, -1.0586517240675382, -0.8953660154593752, -0.9080685577430045, -0.33263343457770383, -1.3963765514816069, -1.7215458681609541, -1.6890966308982023, -2.5627577197078963, -1.0338946351144187, 1.5163483127287227, 0.693165911579098, 1.039403169997818, -0.23856987286402498, 1.0556984159200964, 0.47032124680408527, 1.1196479401582549, -0.23250075946049642, -0.3421645989581854, -0.14172184974930607, 1.4893889792826736, 1.084734350618757, -0.600206473859585, 0.813046343007263, -1.2720030328448155, -0.6238314166761494, -0.7867326677521886, 0.23851489823004535, 0.6543897096953437, 0.1029449407555286, 2.350892738434016, 1.5072670906709673, 1.3178705202786662, 1.3522175904784586, -0.11721288590777701, 0.3898356352420675, 1.8429813335664176, -1.3227560018564628, 1.2417939768234745, -0.1277040272190284, -1.3883128766881185];
