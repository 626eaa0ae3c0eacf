// Symmetric triangle quadrature tables (barycentric points, weights sum to 1).
// Generated by tools/gen_quadrature_tables.py -- do not edit by hand.
// Degrees 1-5 are the classical minimal symmetric rules; higher degrees are
// S3-symmetrized conical-product Gauss rules of odd degree 2n-1.

#include "stokesmini/quadrature.hpp"

namespace stokesmini::detail {

static const double pts_d1[][3] = {
    {0.3333333333333333333333, 0.3333333333333333333333, 0.3333333333333333333333},
};
static const double wts_d1[] = {
    1.000000000000000000000,
};

static const double pts_d2[][3] = {
    {0.6666666666666666666667, 0.1666666666666666666667, 0.1666666666666666666667},
    {0.1666666666666666666667, 0.6666666666666666666667, 0.1666666666666666666667},
    {0.1666666666666666666667, 0.1666666666666666666667, 0.6666666666666666666667},
};
static const double wts_d2[] = {
    0.3333333333333333333333,
    0.3333333333333333333333,
    0.3333333333333333333333,
};

static const double pts_d3[][3] = {
    {0.3333333333333333333333, 0.3333333333333333333333, 0.3333333333333333333333},
    {0.6000000000000000000000, 0.2000000000000000000000, 0.2000000000000000000000},
    {0.2000000000000000000000, 0.6000000000000000000000, 0.2000000000000000000000},
    {0.2000000000000000000000, 0.2000000000000000000000, 0.6000000000000000000000},
};
static const double wts_d3[] = {
    -0.5625000000000000000000,
    0.5208333333333333333333,
    0.5208333333333333333333,
    0.5208333333333333333333,
};

static const double pts_d4[][3] = {
    {0.8168475729804585130809, 0.09157621350977074345957, 0.09157621350977074345957},
    {0.09157621350977074345957, 0.8168475729804585130809, 0.09157621350977074345957},
    {0.09157621350977074345957, 0.09157621350977074345957, 0.8168475729804585130809},
    {0.1081030181680702273633, 0.4459484909159648863183, 0.4459484909159648863183},
    {0.4459484909159648863183, 0.1081030181680702273633, 0.4459484909159648863183},
    {0.4459484909159648863183, 0.4459484909159648863183, 0.1081030181680702273633},
};
static const double wts_d4[] = {
    0.1099517436553218676383,
    0.1099517436553218676383,
    0.1099517436553218676383,
    0.2233815896780114656950,
    0.2233815896780114656950,
    0.2233815896780114656950,
};

static const double pts_d5[][3] = {
    {0.3333333333333333333333, 0.3333333333333333333333, 0.3333333333333333333333},
    {0.05971587178976982045912, 0.4701420641051150897704, 0.4701420641051150897704},
    {0.4701420641051150897704, 0.05971587178976982045912, 0.4701420641051150897704},
    {0.4701420641051150897704, 0.4701420641051150897704, 0.05971587178976982045912},
    {0.7974269853530873223980, 0.1012865073234563388010, 0.1012865073234563388010},
    {0.1012865073234563388010, 0.7974269853530873223980, 0.1012865073234563388010},
    {0.1012865073234563388010, 0.1012865073234563388010, 0.7974269853530873223980},
};
static const double wts_d5[] = {
    0.2250000000000000000000,
    0.1323941527885061807376,
    0.1323941527885061807376,
    0.1323941527885061807376,
    0.1259391805448271525957,
    0.1259391805448271525957,
    0.1259391805448271525957,
};

static const double pts_d7[][3] = {
    {0.8774288093304678539424, 0.06546699455501446386445, 0.05710419611451768219312},
    {0.05710419611451768219312, 0.8774288093304678539424, 0.06546699455501446386445},
    {0.06546699455501446386445, 0.05710419611451768219312, 0.8774288093304678539424},
    {0.6729468631505064002149, 0.05021012321136977210504, 0.2768430136381238276800},
    {0.2768430136381238276800, 0.6729468631505064002149, 0.05021012321136977210504},
    {0.05021012321136977210504, 0.2768430136381238276800, 0.6729468631505064002149},
    {0.3874974834066941672265, 0.02891208422438901271682, 0.5835904323689168200567},
    {0.5835904323689168200567, 0.3874974834066941672265, 0.02891208422438901271682},
    {0.02891208422438901271682, 0.5835904323689168200567, 0.3874974834066941672265},
    {0.1300560792168344399761, 0.009703785126946112175962, 0.8602401356562194478479},
    {0.8602401356562194478479, 0.1300560792168344399761, 0.009703785126946112175962},
    {0.009703785126946112175962, 0.8602401356562194478479, 0.1300560792168344399761},
    {0.6317312516411252833657, 0.3111645522443570344411, 0.05710419611451768219312},
    {0.05710419611451768219312, 0.6317312516411252833657, 0.3111645522443570344411},
    {0.3111645522443570344411, 0.05710419611451768219312, 0.6317312516411252833657},
    {0.4845083266304332513658, 0.2386486597314429209541, 0.2768430136381238276800},
    {0.2768430136381238276800, 0.4845083266304332513658, 0.2386486597314429209541},
    {0.2386486597314429209541, 0.2768430136381238276800, 0.4845083266304332513658},
    {0.2789904634965088115165, 0.1374191041345743684268, 0.5835904323689168200567},
    {0.5835904323689168200567, 0.2789904634965088115165, 0.1374191041345743684268},
    {0.1374191041345743684268, 0.5835904323689168200567, 0.2789904634965088115165},
    {0.09363778443732850353265, 0.04612207990645204861944, 0.8602401356562194478479},
    {0.8602401356562194478479, 0.09363778443732850353265, 0.04612207990645204861944},
    {0.04612207990645204861944, 0.8602401356562194478479, 0.09363778443732850353265},
    {0.3111645522443570344411, 0.6317312516411252833657, 0.05710419611451768219312},
    {0.05710419611451768219312, 0.3111645522443570344411, 0.6317312516411252833657},
    {0.6317312516411252833657, 0.05710419611451768219312, 0.3111645522443570344411},
    {0.2386486597314429209541, 0.4845083266304332513658, 0.2768430136381238276800},
    {0.2768430136381238276800, 0.2386486597314429209541, 0.4845083266304332513658},
    {0.4845083266304332513658, 0.2768430136381238276800, 0.2386486597314429209541},
    {0.1374191041345743684268, 0.2789904634965088115165, 0.5835904323689168200567},
    {0.5835904323689168200567, 0.1374191041345743684268, 0.2789904634965088115165},
    {0.2789904634965088115165, 0.5835904323689168200567, 0.1374191041345743684268},
    {0.04612207990645204861944, 0.09363778443732850353265, 0.8602401356562194478479},
    {0.8602401356562194478479, 0.04612207990645204861944, 0.09363778443732850353265},
    {0.09363778443732850353265, 0.8602401356562194478479, 0.04612207990645204861944},
    {0.06546699455501446386445, 0.8774288093304678539424, 0.05710419611451768219312},
    {0.05710419611451768219312, 0.06546699455501446386445, 0.8774288093304678539424},
    {0.8774288093304678539424, 0.05710419611451768219312, 0.06546699455501446386445},
    {0.05021012321136977210504, 0.6729468631505064002149, 0.2768430136381238276800},
    {0.2768430136381238276800, 0.05021012321136977210504, 0.6729468631505064002149},
    {0.6729468631505064002149, 0.2768430136381238276800, 0.05021012321136977210504},
    {0.02891208422438901271682, 0.3874974834066941672265, 0.5835904323689168200567},
    {0.5835904323689168200567, 0.02891208422438901271682, 0.3874974834066941672265},
    {0.3874974834066941672265, 0.5835904323689168200567, 0.02891208422438901271682},
    {0.009703785126946112175962, 0.1300560792168344399761, 0.8602401356562194478479},
    {0.8602401356562194478479, 0.009703785126946112175962, 0.1300560792168344399761},
    {0.1300560792168344399761, 0.8602401356562194478479, 0.009703785126946112175962},
};
static const double wts_d7[] = {
    0.01571224546225488824495,
    0.01571224546225488824495,
    0.01571224546225488824495,
    0.02359204526539063077593,
    0.02359204526539063077593,
    0.02359204526539063077593,
    0.01505603285491328757228,
    0.01505603285491328757228,
    0.01505603285491328757228,
    0.003615483940350169635686,
    0.003615483940350169635686,
    0.003615483940350169635686,
    0.02945672568157448382447,
    0.02945672568157448382447,
    0.02945672568157448382447,
    0.04422947740469982282121,
    0.04422947740469982282121,
    0.04422947740469982282121,
    0.02822648301449752603654,
    0.02822648301449752603654,
    0.02822648301449752603654,
    0.006778173042985857755606,
    0.006778173042985857755606,
    0.006778173042985857755606,
    0.02945672568157448382447,
    0.02945672568157448382447,
    0.02945672568157448382447,
    0.04422947740469982282121,
    0.04422947740469982282121,
    0.04422947740469982282121,
    0.02822648301449752603654,
    0.02822648301449752603654,
    0.02822648301449752603654,
    0.006778173042985857755606,
    0.006778173042985857755606,
    0.006778173042985857755606,
    0.01571224546225488824495,
    0.01571224546225488824495,
    0.01571224546225488824495,
    0.02359204526539063077593,
    0.02359204526539063077593,
    0.02359204526539063077593,
    0.01505603285491328757228,
    0.01505603285491328757228,
    0.01505603285491328757228,
    0.003615483940350169635686,
    0.003615483940350169635686,
    0.003615483940350169635686,
};

static const double pts_d9[][3] = {
    {0.9151475493787275345637, 0.04504259356980372309547, 0.03980985705146874234081},
    {0.03980985705146874234081, 0.9151475493787275345637, 0.04504259356980372309547},
    {0.04504259356980372309547, 0.03980985705146874234081, 0.9151475493787275345637},
    {0.7643653297812806357169, 0.03762125234511119174727, 0.1980134178736081725358},
    {0.1980134178736081725358, 0.7643653297812806357169, 0.03762125234511119174727},
    {0.03762125234511119174727, 0.1980134178736081725358, 0.7643653297812806357169},
    {0.5356605448081429385157, 0.02636464494447091747928, 0.4379748102473861440050},
    {0.4379748102473861440050, 0.5356605448081429385157, 0.02636464494447091747928},
    {0.02636464494447091747928, 0.4379748102473861440050, 0.5356605448081429385157},
    {0.2902499322507925201476, 0.01428579439557138533782, 0.6954642733536360945146},
    {0.6954642733536360945146, 0.2902499322507925201476, 0.01428579439557138533782},
    {0.01428579439557138533782, 0.6954642733536360945146, 0.2902499322507925201476},
    {0.09391279733377999759829, 0.004622288465046428525210, 0.9014649142011735738765},
    {0.9014649142011735738765, 0.09391279733377999759829, 0.004622288465046428525210},
    {0.004622288465046428525210, 0.9014649142011735738765, 0.09391279733377999759829},
    {0.7386115333961520558869, 0.2215786095523792017723, 0.03980985705146874234081},
    {0.03980985705146874234081, 0.7386115333961520558869, 0.2215786095523792017723},
    {0.2215786095523792017723, 0.03980985705146874234081, 0.7386115333961520558869},
    {0.6169158718590023942786, 0.1850707102673894331856, 0.1980134178736081725358},
    {0.1980134178736081725358, 0.6169158718590023942786, 0.1850707102673894331856},
    {0.1850707102673894331856, 0.1980134178736081725358, 0.6169158718590023942786},
    {0.4323292529703597345112, 0.1296959367822541214838, 0.4379748102473861440050},
    {0.4379748102473861440050, 0.4323292529703597345112, 0.1296959367822541214838},
    {0.1296959367822541214838, 0.4379748102473861440050, 0.4323292529703597345112},
    {0.2342594346380821843020, 0.07027629200828172118339, 0.6954642733536360945146},
    {0.6954642733536360945146, 0.2342594346380821843020, 0.07027629200828172118339},
    {0.07027629200828172118339, 0.6954642733536360945146, 0.2342594346380821843020},
    {0.07579660273506239152537, 0.02273848306376403459813, 0.9014649142011735738765},
    {0.9014649142011735738765, 0.07579660273506239152537, 0.02273848306376403459813},
    {0.02273848306376403459813, 0.9014649142011735738765, 0.07579660273506239152537},
    {0.4800950714742656288296, 0.4800950714742656288296, 0.03980985705146874234081},
    {0.03980985705146874234081, 0.4800950714742656288296, 0.4800950714742656288296},
    {0.4800950714742656288296, 0.03980985705146874234081, 0.4800950714742656288296},
    {0.4009932910631959137321, 0.4009932910631959137321, 0.1980134178736081725358},
    {0.1980134178736081725358, 0.4009932910631959137321, 0.4009932910631959137321},
    {0.4009932910631959137321, 0.1980134178736081725358, 0.4009932910631959137321},
    {0.2810125948763069279975, 0.2810125948763069279975, 0.4379748102473861440050},
    {0.4379748102473861440050, 0.2810125948763069279975, 0.2810125948763069279975},
    {0.2810125948763069279975, 0.4379748102473861440050, 0.2810125948763069279975},
    {0.1522678633231819527427, 0.1522678633231819527427, 0.6954642733536360945146},
    {0.6954642733536360945146, 0.1522678633231819527427, 0.1522678633231819527427},
    {0.1522678633231819527427, 0.6954642733536360945146, 0.1522678633231819527427},
    {0.04926754289941321306175, 0.04926754289941321306175, 0.9014649142011735738765},
    {0.9014649142011735738765, 0.04926754289941321306175, 0.04926754289941321306175},
    {0.04926754289941321306175, 0.9014649142011735738765, 0.04926754289941321306175},
    {0.2215786095523792017723, 0.7386115333961520558869, 0.03980985705146874234081},
    {0.03980985705146874234081, 0.2215786095523792017723, 0.7386115333961520558869},
    {0.7386115333961520558869, 0.03980985705146874234081, 0.2215786095523792017723},
    {0.1850707102673894331856, 0.6169158718590023942786, 0.1980134178736081725358},
    {0.1980134178736081725358, 0.1850707102673894331856, 0.6169158718590023942786},
    {0.6169158718590023942786, 0.1980134178736081725358, 0.1850707102673894331856},
    {0.1296959367822541214838, 0.4323292529703597345112, 0.4379748102473861440050},
    {0.4379748102473861440050, 0.1296959367822541214838, 0.4323292529703597345112},
    {0.4323292529703597345112, 0.4379748102473861440050, 0.1296959367822541214838},
    {0.07027629200828172118339, 0.2342594346380821843020, 0.6954642733536360945146},
    {0.6954642733536360945146, 0.07027629200828172118339, 0.2342594346380821843020},
    {0.2342594346380821843020, 0.6954642733536360945146, 0.07027629200828172118339},
    {0.02273848306376403459813, 0.07579660273506239152537, 0.9014649142011735738765},
    {0.9014649142011735738765, 0.02273848306376403459813, 0.07579660273506239152537},
    {0.07579660273506239152537, 0.9014649142011735738765, 0.02273848306376403459813},
    {0.04504259356980372309547, 0.9151475493787275345637, 0.03980985705146874234081},
    {0.03980985705146874234081, 0.04504259356980372309547, 0.9151475493787275345637},
    {0.9151475493787275345637, 0.03980985705146874234081, 0.04504259356980372309547},
    {0.03762125234511119174727, 0.7643653297812806357169, 0.1980134178736081725358},
    {0.1980134178736081725358, 0.03762125234511119174727, 0.7643653297812806357169},
    {0.7643653297812806357169, 0.1980134178736081725358, 0.03762125234511119174727},
    {0.02636464494447091747928, 0.5356605448081429385157, 0.4379748102473861440050},
    {0.4379748102473861440050, 0.02636464494447091747928, 0.5356605448081429385157},
    {0.5356605448081429385157, 0.4379748102473861440050, 0.02636464494447091747928},
    {0.01428579439557138533782, 0.2902499322507925201476, 0.6954642733536360945146},
    {0.6954642733536360945146, 0.01428579439557138533782, 0.2902499322507925201476},
    {0.2902499322507925201476, 0.6954642733536360945146, 0.01428579439557138533782},
    {0.004622288465046428525210, 0.09391279733377999759829, 0.9014649142011735738765},
    {0.9014649142011735738765, 0.004622288465046428525210, 0.09391279733377999759829},
    {0.09391279733377999759829, 0.9014649142011735738765, 0.004622288465046428525210},
};
static const double wts_d9[] = {
    0.007643386901061698531169,
    0.007643386901061698531169,
    0.007643386901061698531169,
    0.01320272208803156918693,
    0.01320272208803156918693,
    0.01320272208803156918693,
    0.01156100428757713341887,
    0.01156100428757713341887,
    0.01156100428757713341887,
    0.005836999454775887824613,
    0.005836999454775887824613,
    0.005836999454775887824613,
    0.001243701444585225624123,
    0.001243701444585225624123,
    0.001243701444585225624123,
    0.01544081461966559089575,
    0.01544081461966559089575,
    0.01544081461966559089575,
    0.02667152492410694939701,
    0.02667152492410694939701,
    0.02667152492410694939701,
    0.02335500300224781354466,
    0.02335500300224781354466,
    0.02335500300224781354466,
    0.01179163474032231058495,
    0.01179163474032231058495,
    0.01179163474032231058495,
    0.002512467796885080251184,
    0.002512467796885080251184,
    0.002512467796885080251184,
    0.01835265710964654066240,
    0.01835265710964654066240,
    0.01835265710964654066240,
    0.03170126470530267315990,
    0.03170126470530267315990,
    0.03170126470530267315990,
    0.02775931014346331187163,
    0.02775931014346331187163,
    0.02775931014346331187163,
    0.01401531165821471674797,
    0.01401531165821471674797,
    0.01401531165821471674797,
    0.002986271198187572372915,
    0.002986271198187572372915,
    0.002986271198187572372915,
    0.01544081461966559089575,
    0.01544081461966559089575,
    0.01544081461966559089575,
    0.02667152492410694939701,
    0.02667152492410694939701,
    0.02667152492410694939701,
    0.02335500300224781354466,
    0.02335500300224781354466,
    0.02335500300224781354466,
    0.01179163474032231058495,
    0.01179163474032231058495,
    0.01179163474032231058495,
    0.002512467796885080251184,
    0.002512467796885080251184,
    0.002512467796885080251184,
    0.007643386901061698531169,
    0.007643386901061698531169,
    0.007643386901061698531169,
    0.01320272208803156918693,
    0.01320272208803156918693,
    0.01320272208803156918693,
    0.01156100428757713341887,
    0.01156100428757713341887,
    0.01156100428757713341887,
    0.005836999454775887824613,
    0.005836999454775887824613,
    0.005836999454775887824613,
    0.001243701444585225624123,
    0.001243701444585225624123,
    0.001243701444585225624123,
};

static const double pts_d11[][3] = {
    {0.9379082062257552128264, 0.03277536661445989520155, 0.02931642715978489197205},
    {0.02931642715978489197205, 0.9379082062257552128264, 0.03277536661445989520155},
    {0.03277536661445989520155, 0.02931642715978489197205, 0.9379082062257552128264},
    {0.8231560673189565797130, 0.02876533301255912843698, 0.1480785996684842918500},
    {0.1480785996684842918500, 0.8231560673189565797130, 0.02876533301255912843698},
    {0.02876533301255912843698, 0.1480785996684842918500, 0.8231560673189565797130},
    {0.6406284367408150664524, 0.02238687297803063445050, 0.3369846902811542990971},
    {0.3369846902811542990971, 0.6406284367408150664524, 0.02238687297803063445050},
    {0.02238687297803063445050, 0.3369846902811542990971, 0.6406284367408150664524},
    {0.4264269178617787075615, 0.01490156336667116035715, 0.5586715187715501320814},
    {0.5586715187715501320814, 0.4264269178617787075615, 0.01490156336667116035715},
    {0.01490156336667116035715, 0.5586715187715501320814, 0.4264269178617787075615},
    {0.2229742632686590670493, 0.007791874701286432033794, 0.7692338620300545009169},
    {0.7692338620300545009169, 0.2229742632686590670493, 0.007791874701286432033794},
    {0.007791874701286432033794, 0.7692338620300545009169, 0.2229742632686590670493},
    {0.07058763152758864209412, 0.002466697152670243054005, 0.9269456713197411148519},
    {0.9269456713197411148519, 0.07058763152758864209412, 0.002466697152670243054005},
    {0.002466697152670243054005, 0.9269456713197411148519, 0.07058763152758864209412},
    {0.8062543312453876598622, 0.1644292415948274481657, 0.02931642715978489197205},
    {0.02931642715978489197205, 0.8062543312453876598622, 0.1644292415948274481657},
    {0.1644292415948274481657, 0.02931642715978489197205, 0.8062543312453876598622},
    {0.7076099133810990616943, 0.1443114869504166464557, 0.1480785996684842918500},
    {0.1480785996684842918500, 0.7076099133810990616943, 0.1443114869504166464557},
    {0.1443114869504166464557, 0.1480785996684842918500, 0.7076099133810990616943},
    {0.5507036279378920051809, 0.1123116817809536957220, 0.3369846902811542990971},
    {0.3369846902811542990971, 0.5507036279378920051809, 0.1123116817809536957220},
    {0.1123116817809536957220, 0.3369846902811542990971, 0.5507036279378920051809},
    {0.3665695077658007702409, 0.07475897346264909767773, 0.5586715187715501320814},
    {0.5586715187715501320814, 0.3665695077658007702409, 0.07475897346264909767773},
    {0.07475897346264909767773, 0.5586715187715501320814, 0.3665695077658007702409},
    {0.1916754372371212550377, 0.03909070073282424404541, 0.7692338620300545009169},
    {0.7692338620300545009169, 0.1916754372371212550377, 0.03909070073282424404541},
    {0.03909070073282424404541, 0.7692338620300545009169, 0.1916754372371212550377},
    {0.06067926826281884697546, 0.01237506041744003817266, 0.9269456713197411148519},
    {0.9269456713197411148519, 0.06067926826281884697546, 0.01237506041744003817266},
    {0.01237506041744003817266, 0.9269456713197411148519, 0.06067926826281884697546},
    {0.6011536484678384088446, 0.3695299243723766991834, 0.02931642715978489197205},
    {0.02931642715978489197205, 0.6011536484678384088446, 0.3695299243723766991834},
    {0.3695299243723766991834, 0.02931642715978489197205, 0.6011536484678384088446},
    {0.5276030957427396717394, 0.3243183045887760364107, 0.1480785996684842918500},
    {0.1480785996684842918500, 0.5276030957427396717394, 0.3243183045887760364107},
    {0.3243183045887760364107, 0.1480785996684842918500, 0.5276030957427396717394},
    {0.4106117416423276875277, 0.2524035680765180133753, 0.3369846902811542990971},
    {0.3369846902811542990971, 0.4106117416423276875277, 0.2524035680765180133753},
    {0.2524035680765180133753, 0.3369846902811542990971, 0.4106117416423276875277},
    {0.2733189621072580103860, 0.1680095191211918575326, 0.5586715187715501320814},
    {0.5586715187715501320814, 0.2733189621072580103860, 0.1680095191211918575326},
    {0.1680095191211918575326, 0.5586715187715501320814, 0.2733189621072580103860},
    {0.1429156829939483079172, 0.08785045497599719116592, 0.7692338620300545009169},
    {0.7692338620300545009169, 0.1429156829939483079172, 0.08785045497599719116592},
    {0.08785045497599719116592, 0.7692338620300545009169, 0.1429156829939483079172},
    {0.04524324656489830444986, 0.02781108211536058069827, 0.9269456713197411148519},
    {0.9269456713197411148519, 0.04524324656489830444986, 0.02781108211536058069827},
    {0.02781108211536058069827, 0.9269456713197411148519, 0.04524324656489830444986},
    {0.3695299243723766991834, 0.6011536484678384088446, 0.02931642715978489197205},
    {0.02931642715978489197205, 0.3695299243723766991834, 0.6011536484678384088446},
    {0.6011536484678384088446, 0.02931642715978489197205, 0.3695299243723766991834},
    {0.3243183045887760364107, 0.5276030957427396717394, 0.1480785996684842918500},
    {0.1480785996684842918500, 0.3243183045887760364107, 0.5276030957427396717394},
    {0.5276030957427396717394, 0.1480785996684842918500, 0.3243183045887760364107},
    {0.2524035680765180133753, 0.4106117416423276875277, 0.3369846902811542990971},
    {0.3369846902811542990971, 0.2524035680765180133753, 0.4106117416423276875277},
    {0.4106117416423276875277, 0.3369846902811542990971, 0.2524035680765180133753},
    {0.1680095191211918575326, 0.2733189621072580103860, 0.5586715187715501320814},
    {0.5586715187715501320814, 0.1680095191211918575326, 0.2733189621072580103860},
    {0.2733189621072580103860, 0.5586715187715501320814, 0.1680095191211918575326},
    {0.08785045497599719116592, 0.1429156829939483079172, 0.7692338620300545009169},
    {0.7692338620300545009169, 0.08785045497599719116592, 0.1429156829939483079172},
    {0.1429156829939483079172, 0.7692338620300545009169, 0.08785045497599719116592},
    {0.02781108211536058069827, 0.04524324656489830444986, 0.9269456713197411148519},
    {0.9269456713197411148519, 0.02781108211536058069827, 0.04524324656489830444986},
    {0.04524324656489830444986, 0.9269456713197411148519, 0.02781108211536058069827},
    {0.1644292415948274481657, 0.8062543312453876598622, 0.02931642715978489197205},
    {0.02931642715978489197205, 0.1644292415948274481657, 0.8062543312453876598622},
    {0.8062543312453876598622, 0.02931642715978489197205, 0.1644292415948274481657},
    {0.1443114869504166464557, 0.7076099133810990616943, 0.1480785996684842918500},
    {0.1480785996684842918500, 0.1443114869504166464557, 0.7076099133810990616943},
    {0.7076099133810990616943, 0.1480785996684842918500, 0.1443114869504166464557},
    {0.1123116817809536957220, 0.5507036279378920051809, 0.3369846902811542990971},
    {0.3369846902811542990971, 0.1123116817809536957220, 0.5507036279378920051809},
    {0.5507036279378920051809, 0.3369846902811542990971, 0.1123116817809536957220},
    {0.07475897346264909767773, 0.3665695077658007702409, 0.5586715187715501320814},
    {0.5586715187715501320814, 0.07475897346264909767773, 0.3665695077658007702409},
    {0.3665695077658007702409, 0.5586715187715501320814, 0.07475897346264909767773},
    {0.03909070073282424404541, 0.1916754372371212550377, 0.7692338620300545009169},
    {0.7692338620300545009169, 0.03909070073282424404541, 0.1916754372371212550377},
    {0.1916754372371212550377, 0.7692338620300545009169, 0.03909070073282424404541},
    {0.01237506041744003817266, 0.06067926826281884697546, 0.9269456713197411148519},
    {0.9269456713197411148519, 0.01237506041744003817266, 0.06067926826281884697546},
    {0.06067926826281884697546, 0.9269456713197411148519, 0.01237506041744003817266},
    {0.03277536661445989520155, 0.9379082062257552128264, 0.02931642715978489197205},
    {0.02931642715978489197205, 0.03277536661445989520155, 0.9379082062257552128264},
    {0.9379082062257552128264, 0.02931642715978489197205, 0.03277536661445989520155},
    {0.02876533301255912843698, 0.8231560673189565797130, 0.1480785996684842918500},
    {0.1480785996684842918500, 0.02876533301255912843698, 0.8231560673189565797130},
    {0.8231560673189565797130, 0.1480785996684842918500, 0.02876533301255912843698},
    {0.02238687297803063445050, 0.6406284367408150664524, 0.3369846902811542990971},
    {0.3369846902811542990971, 0.02238687297803063445050, 0.6406284367408150664524},
    {0.6406284367408150664524, 0.3369846902811542990971, 0.02238687297803063445050},
    {0.01490156336667116035715, 0.4264269178617787075615, 0.5586715187715501320814},
    {0.5586715187715501320814, 0.01490156336667116035715, 0.4264269178617787075615},
    {0.4264269178617787075615, 0.5586715187715501320814, 0.01490156336667116035715},
    {0.007791874701286432033794, 0.2229742632686590670493, 0.7692338620300545009169},
    {0.7692338620300545009169, 0.007791874701286432033794, 0.2229742632686590670493},
    {0.2229742632686590670493, 0.7692338620300545009169, 0.007791874701286432033794},
    {0.002466697152670243054005, 0.07058763152758864209412, 0.9269456713197411148519},
    {0.9269456713197411148519, 0.002466697152670243054005, 0.07058763152758864209412},
    {0.07058763152758864209412, 0.9269456713197411148519, 0.002466697152670243054005},
};
static const double wts_d11[] = {
    0.004129510235105899906676,
    0.004129510235105899906676,
    0.004129510235105899906676,
    0.007740583177998342953891,
    0.007740583177998342953891,
    0.007740583177998342953891,
    0.008040404269510072717974,
    0.008040404269510072717974,
    0.008040404269510072717974,
    0.005634357197962081099289,
    0.005634357197962081099289,
    0.005634357197962081099289,
    0.002510198808461115286156,
    0.002510198808461115286156,
    0.002510198808461115286156,
    0.0004990283741575455427300,
    0.0004990283741575455427300,
    0.0004990283741575455427300,
    0.008695596220055220858247,
    0.008695596220055220858247,
    0.008695596220055220858247,
    0.01629950817203854282450,
    0.01629950817203854282450,
    0.01629950817203854282450,
    0.01693084772603177054691,
    0.01693084772603177054691,
    0.01693084772603177054691,
    0.01186438399801751817000,
    0.01186438399801751817000,
    0.01186438399801751817000,
    0.005285778222530989806684,
    0.005285778222530989806684,
    0.005285778222530989806684,
    0.001050814502682392388642,
    0.001050814502682392388642,
    0.001050814502682392388642,
    0.01127833712000844045356,
    0.01127833712000844045356,
    0.01127833712000844045356,
    0.02114074106046931983517,
    0.02114074106046931983517,
    0.02114074106046931983517,
    0.02195959926719113277481,
    0.02195959926719113277481,
    0.02195959926719113277481,
    0.01538830910090548877091,
    0.01538830910090548877091,
    0.01538830910090548877091,
    0.006855744819177553409886,
    0.006855744819177553409886,
    0.006855744819177553409886,
    0.001362924394363239320634,
    0.001362924394363239320634,
    0.001362924394363239320634,
    0.01127833712000844045356,
    0.01127833712000844045356,
    0.01127833712000844045356,
    0.02114074106046931983517,
    0.02114074106046931983517,
    0.02114074106046931983517,
    0.02195959926719113277481,
    0.02195959926719113277481,
    0.02195959926719113277481,
    0.01538830910090548877091,
    0.01538830910090548877091,
    0.01538830910090548877091,
    0.006855744819177553409886,
    0.006855744819177553409886,
    0.006855744819177553409886,
    0.001362924394363239320634,
    0.001362924394363239320634,
    0.001362924394363239320634,
    0.008695596220055220858247,
    0.008695596220055220858247,
    0.008695596220055220858247,
    0.01629950817203854282450,
    0.01629950817203854282450,
    0.01629950817203854282450,
    0.01693084772603177054691,
    0.01693084772603177054691,
    0.01693084772603177054691,
    0.01186438399801751817000,
    0.01186438399801751817000,
    0.01186438399801751817000,
    0.005285778222530989806684,
    0.005285778222530989806684,
    0.005285778222530989806684,
    0.001050814502682392388642,
    0.001050814502682392388642,
    0.001050814502682392388642,
    0.004129510235105899906676,
    0.004129510235105899906676,
    0.004129510235105899906676,
    0.007740583177998342953891,
    0.007740583177998342953891,
    0.007740583177998342953891,
    0.008040404269510072717974,
    0.008040404269510072717974,
    0.008040404269510072717974,
    0.005634357197962081099289,
    0.005634357197962081099289,
    0.005634357197962081099289,
    0.002510198808461115286156,
    0.002510198808461115286156,
    0.002510198808461115286156,
    0.0004990283741575455427300,
    0.0004990283741575455427300,
    0.0004990283741575455427300,
};

static const double pts_d13[][3] = {
    {0.9526465811852267450205, 0.02487403237606075687067, 0.02247938643871249810883},
    {0.02247938643871249810883, 0.9526465811852267450205, 0.02487403237606075687067},
    {0.02487403237606075687067, 0.02247938643871249810883, 0.9526465811852267450205},
    {0.8627930312234321269907, 0.02252791561566364109969, 0.1146790531609042319096},
    {0.1146790531609042319096, 0.8627930312234321269907, 0.02252791561566364109969},
    {0.02252791561566364109969, 0.1146790531609042319096, 0.8627930312234321269907},
    {0.7155274328665677961772, 0.01868274434884273534597, 0.2657898227845894684768},
    {0.2657898227845894684768, 0.7155274328665677961772, 0.01868274434884273534597},
    {0.01868274434884273534597, 0.2657898227845894684768, 0.7155274328665677961772},
    {0.5332307311739592970063, 0.01392289515659608599518, 0.4528463736694446169986},
    {0.4528463736694446169986, 0.5332307311739592970063, 0.01392289515659608599518},
    {0.01392289515659608599518, 0.4528463736694446169986, 0.5332307311739592970063},
    {0.3436518131064529336764, 0.008972904006716703697493, 0.6473752828868303626261},
    {0.6473752828868303626261, 0.3436518131064529336764, 0.008972904006716703697493},
    {0.008972904006716703697493, 0.6473752828868303626261, 0.3436518131064529336764},
    {0.1756542791952544822245, 0.004586412541637882763080, 0.8197593082631076350124},
    {0.8197593082631076350124, 0.1756542791952544822245, 0.004586412541637882763080},
    {0.004586412541637882763080, 0.8197593082631076350124, 0.1756542791952544822245},
    {0.05483090095558919801996, 0.001431659581332948445689, 0.9437374394630778535343},
    {0.9437374394630778535343, 0.05483090095558919801996, 0.001431659581332948445689},
    {0.001431659581332948445689, 0.9437374394630778535343, 0.05483090095558919801996},
    {0.8511913165416182569576, 0.1263292970196692449336, 0.02247938643871249810883},
    {0.02247938643871249810883, 0.8511913165416182569576, 0.1263292970196692449336},
    {0.1263292970196692449336, 0.02247938643871249810883, 0.8511913165416182569576},
    {0.7709070190923344551806, 0.1144139277467613129097, 0.1146790531609042319096},
    {0.1146790531609042319096, 0.7709070190923344551806, 0.1144139277467613129097},
    {0.1144139277467613129097, 0.1146790531609042319096, 0.7709070190923344551806},
    {0.6393249602025477005697, 0.09488521701286283095347, 0.2657898227845894684768},
    {0.2657898227845894684768, 0.6393249602025477005697, 0.09488521701286283095347},
    {0.09488521701286283095347, 0.2657898227845894684768, 0.6393249602025477005697},
    {0.4764425517842300796203, 0.07071107454632530338118, 0.4528463736694446169986},
    {0.4528463736694446169986, 0.4764425517842300796203, 0.07071107454632530338118},
    {0.07071107454632530338118, 0.4528463736694446169986, 0.4764425517842300796203},
    {0.3070534708328746962390, 0.04557124628029494113491, 0.6473752828868303626261},
    {0.6473752828868303626261, 0.3070534708328746962390, 0.04557124628029494113491},
    {0.04557124628029494113491, 0.6473752828868303626261, 0.3070534708328746962390},
    {0.1569473927869025685393, 0.02329329894998979644829, 0.8197593082631076350124},
    {0.8197593082631076350124, 0.1569473927869025685393, 0.02329329894998979644829},
    {0.02329329894998979644829, 0.8197593082631076350124, 0.1569473927869025685393},
    {0.04899150187836186397270, 0.007271058658560282492949, 0.9437374394630778535343},
    {0.9437374394630778535343, 0.04899150187836186397270, 0.007271058658560282492949},
    {0.007271058658560282492949, 0.9437374394630778535343, 0.04899150187836186397270},
    {0.6871213074732971930007, 0.2903993060879903088905, 0.02247938643871249810883},
    {0.02247938643871249810883, 0.6871213074732971930007, 0.2903993060879903088905},
    {0.2903993060879903088905, 0.02247938643871249810883, 0.6871213074732971930007},
    {0.6223120802632945899673, 0.2630088665758011781231, 0.1146790531609042319096},
    {0.1146790531609042319096, 0.6223120802632945899673, 0.2630088665758011781231},
    {0.2630088665758011781231, 0.1146790531609042319096, 0.6223120802632945899673},
    {0.5160929088651122095057, 0.2181172683502983220175, 0.2657898227845894684768},
    {0.2657898227845894684768, 0.5160929088651122095057, 0.2181172683502983220175},
    {0.2181172683502983220175, 0.2657898227845894684768, 0.5160929088651122095057},
    {0.3846066363176857183847, 0.1625469900128696646168, 0.4528463736694446169986},
    {0.4528463736694446169986, 0.3846066363176857183847, 0.1625469900128696646168},
    {0.1625469900128696646168, 0.4528463736694446169986, 0.3846066363176857183847},
    {0.2478678744046879110811, 0.1047568427084817262928, 0.6473752828868303626261},
    {0.6473752828868303626261, 0.2478678744046879110811, 0.1047568427084817262928},
    {0.1047568427084817262928, 0.6473752828868303626261, 0.2478678744046879110811},
    {0.1266952512796091127748, 0.05354544045728325221283, 0.8197593082631076350124},
    {0.8197593082631076350124, 0.1266952512796091127748, 0.05354544045728325221283},
    {0.05354544045728325221283, 0.8197593082631076350124, 0.1266952512796091127748},
    {0.03954822396745464351140, 0.01671433656946750295425, 0.9437374394630778535343},
    {0.9437374394630778535343, 0.03954822396745464351140, 0.01671433656946750295425},
    {0.01671433656946750295425, 0.9437374394630778535343, 0.03954822396745464351140},
    {0.4887603067806437509456, 0.4887603067806437509456, 0.02247938643871249810883},
    {0.02247938643871249810883, 0.4887603067806437509456, 0.4887603067806437509456},
    {0.4887603067806437509456, 0.02247938643871249810883, 0.4887603067806437509456},
    {0.4426604734195478840452, 0.4426604734195478840452, 0.1146790531609042319096},
    {0.1146790531609042319096, 0.4426604734195478840452, 0.4426604734195478840452},
    {0.4426604734195478840452, 0.1146790531609042319096, 0.4426604734195478840452},
    {0.3671050886077052657616, 0.3671050886077052657616, 0.2657898227845894684768},
    {0.2657898227845894684768, 0.3671050886077052657616, 0.3671050886077052657616},
    {0.3671050886077052657616, 0.2657898227845894684768, 0.3671050886077052657616},
    {0.2735768131652776915007, 0.2735768131652776915007, 0.4528463736694446169986},
    {0.4528463736694446169986, 0.2735768131652776915007, 0.2735768131652776915007},
    {0.2735768131652776915007, 0.4528463736694446169986, 0.2735768131652776915007},
    {0.1763123585565848186870, 0.1763123585565848186870, 0.6473752828868303626261},
    {0.6473752828868303626261, 0.1763123585565848186870, 0.1763123585565848186870},
    {0.1763123585565848186870, 0.6473752828868303626261, 0.1763123585565848186870},
    {0.09012034586844618249379, 0.09012034586844618249379, 0.8197593082631076350124},
    {0.8197593082631076350124, 0.09012034586844618249379, 0.09012034586844618249379},
    {0.09012034586844618249379, 0.8197593082631076350124, 0.09012034586844618249379},
    {0.02813128026846107323283, 0.02813128026846107323283, 0.9437374394630778535343},
    {0.9437374394630778535343, 0.02813128026846107323283, 0.02813128026846107323283},
    {0.02813128026846107323283, 0.9437374394630778535343, 0.02813128026846107323283},
    {0.2903993060879903088905, 0.6871213074732971930007, 0.02247938643871249810883},
    {0.02247938643871249810883, 0.2903993060879903088905, 0.6871213074732971930007},
    {0.6871213074732971930007, 0.02247938643871249810883, 0.2903993060879903088905},
    {0.2630088665758011781231, 0.6223120802632945899673, 0.1146790531609042319096},
    {0.1146790531609042319096, 0.2630088665758011781231, 0.6223120802632945899673},
    {0.6223120802632945899673, 0.1146790531609042319096, 0.2630088665758011781231},
    {0.2181172683502983220175, 0.5160929088651122095057, 0.2657898227845894684768},
    {0.2657898227845894684768, 0.2181172683502983220175, 0.5160929088651122095057},
    {0.5160929088651122095057, 0.2657898227845894684768, 0.2181172683502983220175},
    {0.1625469900128696646168, 0.3846066363176857183847, 0.4528463736694446169986},
    {0.4528463736694446169986, 0.1625469900128696646168, 0.3846066363176857183847},
    {0.3846066363176857183847, 0.4528463736694446169986, 0.1625469900128696646168},
    {0.1047568427084817262928, 0.2478678744046879110811, 0.6473752828868303626261},
    {0.6473752828868303626261, 0.1047568427084817262928, 0.2478678744046879110811},
    {0.2478678744046879110811, 0.6473752828868303626261, 0.1047568427084817262928},
    {0.05354544045728325221283, 0.1266952512796091127748, 0.8197593082631076350124},
    {0.8197593082631076350124, 0.05354544045728325221283, 0.1266952512796091127748},
    {0.1266952512796091127748, 0.8197593082631076350124, 0.05354544045728325221283},
    {0.01671433656946750295425, 0.03954822396745464351140, 0.9437374394630778535343},
    {0.9437374394630778535343, 0.01671433656946750295425, 0.03954822396745464351140},
    {0.03954822396745464351140, 0.9437374394630778535343, 0.01671433656946750295425},
    {0.1263292970196692449336, 0.8511913165416182569576, 0.02247938643871249810883},
    {0.02247938643871249810883, 0.1263292970196692449336, 0.8511913165416182569576},
    {0.8511913165416182569576, 0.02247938643871249810883, 0.1263292970196692449336},
    {0.1144139277467613129097, 0.7709070190923344551806, 0.1146790531609042319096},
    {0.1146790531609042319096, 0.1144139277467613129097, 0.7709070190923344551806},
    {0.7709070190923344551806, 0.1146790531609042319096, 0.1144139277467613129097},
    {0.09488521701286283095347, 0.6393249602025477005697, 0.2657898227845894684768},
    {0.2657898227845894684768, 0.09488521701286283095347, 0.6393249602025477005697},
    {0.6393249602025477005697, 0.2657898227845894684768, 0.09488521701286283095347},
    {0.07071107454632530338118, 0.4764425517842300796203, 0.4528463736694446169986},
    {0.4528463736694446169986, 0.07071107454632530338118, 0.4764425517842300796203},
    {0.4764425517842300796203, 0.4528463736694446169986, 0.07071107454632530338118},
    {0.04557124628029494113491, 0.3070534708328746962390, 0.6473752828868303626261},
    {0.6473752828868303626261, 0.04557124628029494113491, 0.3070534708328746962390},
    {0.3070534708328746962390, 0.6473752828868303626261, 0.04557124628029494113491},
    {0.02329329894998979644829, 0.1569473927869025685393, 0.8197593082631076350124},
    {0.8197593082631076350124, 0.02329329894998979644829, 0.1569473927869025685393},
    {0.1569473927869025685393, 0.8197593082631076350124, 0.02329329894998979644829},
    {0.007271058658560282492949, 0.04899150187836186397270, 0.9437374394630778535343},
    {0.9437374394630778535343, 0.007271058658560282492949, 0.04899150187836186397270},
    {0.04899150187836186397270, 0.9437374394630778535343, 0.007271058658560282492949},
    {0.02487403237606075687067, 0.9526465811852267450205, 0.02247938643871249810883},
    {0.02247938643871249810883, 0.02487403237606075687067, 0.9526465811852267450205},
    {0.9526465811852267450205, 0.02247938643871249810883, 0.02487403237606075687067},
    {0.02252791561566364109969, 0.8627930312234321269907, 0.1146790531609042319096},
    {0.1146790531609042319096, 0.02252791561566364109969, 0.8627930312234321269907},
    {0.8627930312234321269907, 0.1146790531609042319096, 0.02252791561566364109969},
    {0.01868274434884273534597, 0.7155274328665677961772, 0.2657898227845894684768},
    {0.2657898227845894684768, 0.01868274434884273534597, 0.7155274328665677961772},
    {0.7155274328665677961772, 0.2657898227845894684768, 0.01868274434884273534597},
    {0.01392289515659608599518, 0.5332307311739592970063, 0.4528463736694446169986},
    {0.4528463736694446169986, 0.01392289515659608599518, 0.5332307311739592970063},
    {0.5332307311739592970063, 0.4528463736694446169986, 0.01392289515659608599518},
    {0.008972904006716703697493, 0.3436518131064529336764, 0.6473752828868303626261},
    {0.6473752828868303626261, 0.008972904006716703697493, 0.3436518131064529336764},
    {0.3436518131064529336764, 0.6473752828868303626261, 0.008972904006716703697493},
    {0.004586412541637882763080, 0.1756542791952544822245, 0.8197593082631076350124},
    {0.8197593082631076350124, 0.004586412541637882763080, 0.1756542791952544822245},
    {0.1756542791952544822245, 0.8197593082631076350124, 0.004586412541637882763080},
    {0.001431659581332948445689, 0.05483090095558919801996, 0.9437374394630778535343},
    {0.9437374394630778535343, 0.001431659581332948445689, 0.05483090095558919801996},
    {0.05483090095558919801996, 0.9437374394630778535343, 0.001431659581332948445689},
};
static const double wts_d13[] = {
    0.002415644053150524618051,
    0.002415644053150524618051,
    0.002415644053150524618051,
    0.004769762519397427979673,
    0.004769762519397427979673,
    0.004769762519397427979673,
    0.005498402009019716025840,
    0.005498402009019716025840,
    0.005498402009019716025840,
    0.004623695169156048494908,
    0.004623695169156048494908,
    0.004623695169156048494908,
    0.002865273391988282164704,
    0.002865273391988282164704,
    0.002865273391988282164704,
    0.001182990047625366405628,
    0.001182990047625366405628,
    0.001182990047625366405628,
    0.0002250605044742498562973,
    0.0002250605044742498562973,
    0.0002250605044742498562973,
    0.005218124432330062711475,
    0.005218124432330062711475,
    0.005218124432330062711475,
    0.01030334510848937830735,
    0.01030334510848937830735,
    0.01030334510848937830735,
    0.01187730693378386362385,
    0.01187730693378386362385,
    0.01187730693378386362385,
    0.009987819479592942381272,
    0.009987819479592942381272,
    0.009987819479592942381272,
    0.006189385837925697568409,
    0.006189385837925697568409,
    0.006189385837925697568409,
    0.002555421715656456050406,
    0.002555421715656456050406,
    0.002555421715656456050406,
    0.0004861617404343773408077,
    0.0004861617404343773408077,
    0.0004861617404343773408077,
    0.007123340400876644933294,
    0.007123340400876644933294,
    0.007123340400876644933294,
    0.01406525187876829296360,
    0.01406525187876829296360,
    0.01406525187876829296360,
    0.01621389091659807716235,
    0.01621389091659807716235,
    0.01621389091659807716235,
    0.01363452308167320945612,
    0.01363452308167320945612,
    0.01363452308167320945612,
    0.008449224001395199699310,
    0.008449224001395199699310,
    0.008449224001395199699310,
    0.003488444743791755150920,
    0.003488444743791755150920,
    0.003488444743791755150920,
    0.0006636667277499781261361,
    0.0006636667277499781261361,
    0.0006636667277499781261361,
    0.007797357842946236242068,
    0.007797357842946236242068,
    0.007797357842946236242068,
    0.01539611978060620311282,
    0.01539611978060620311282,
    0.01539611978060620311282,
    0.01774806514758890432174,
    0.01774806514758890432174,
    0.01774806514758890432174,
    0.01492463500307137932935,
    0.01492463500307137932935,
    0.01492463500307137932935,
    0.009248697847709287790919,
    0.009248697847709287790919,
    0.009248697847709287790919,
    0.003818524800435161748979,
    0.003818524800435161748979,
    0.003818524800435161748979,
    0.0007264635232210587466454,
    0.0007264635232210587466454,
    0.0007264635232210587466454,
    0.007123340400876644933294,
    0.007123340400876644933294,
    0.007123340400876644933294,
    0.01406525187876829296360,
    0.01406525187876829296360,
    0.01406525187876829296360,
    0.01621389091659807716235,
    0.01621389091659807716235,
    0.01621389091659807716235,
    0.01363452308167320945612,
    0.01363452308167320945612,
    0.01363452308167320945612,
    0.008449224001395199699310,
    0.008449224001395199699310,
    0.008449224001395199699310,
    0.003488444743791755150920,
    0.003488444743791755150920,
    0.003488444743791755150920,
    0.0006636667277499781261361,
    0.0006636667277499781261361,
    0.0006636667277499781261361,
    0.005218124432330062711475,
    0.005218124432330062711475,
    0.005218124432330062711475,
    0.01030334510848937830735,
    0.01030334510848937830735,
    0.01030334510848937830735,
    0.01187730693378386362385,
    0.01187730693378386362385,
    0.01187730693378386362385,
    0.009987819479592942381272,
    0.009987819479592942381272,
    0.009987819479592942381272,
    0.006189385837925697568409,
    0.006189385837925697568409,
    0.006189385837925697568409,
    0.002555421715656456050406,
    0.002555421715656456050406,
    0.002555421715656456050406,
    0.0004861617404343773408077,
    0.0004861617404343773408077,
    0.0004861617404343773408077,
    0.002415644053150524618051,
    0.002415644053150524618051,
    0.002415644053150524618051,
    0.004769762519397427979673,
    0.004769762519397427979673,
    0.004769762519397427979673,
    0.005498402009019716025840,
    0.005498402009019716025840,
    0.005498402009019716025840,
    0.004623695169156048494908,
    0.004623695169156048494908,
    0.004623695169156048494908,
    0.002865273391988282164704,
    0.002865273391988282164704,
    0.002865273391988282164704,
    0.001182990047625366405628,
    0.001182990047625366405628,
    0.001182990047625366405628,
    0.0002250605044742498562973,
    0.0002250605044742498562973,
    0.0002250605044742498562973,
};

static const double pts_d15[][3] = {
    {0.9627180345923863799835, 0.01950205026025016820334, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.9627180345923863799835, 0.01950205026025016820334},
    {0.01950205026025016820334, 0.01777991514736345181321, 0.9627180345923863799835},
    {0.8906345571364059357506, 0.01804183496380010824571, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.8906345571364059357506, 0.01804183496380010824571},
    {0.01804183496380010824571, 0.09132360789979395600374, 0.8906345571364059357506},
    {0.7700915590884350060487, 0.01559996151593423559378, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.7700915590884350060487, 0.01559996151593423559378},
    {0.01559996151593423559378, 0.2143084793956307583575, 0.7700915590884350060487},
    {0.6155975034798876711670, 0.01247033193684002640218, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.6155975034798876711670, 0.01247033193684002640218},
    {0.01247033193684002640218, 0.3719321645832723024309, 0.6155975034798876711670},
    {0.4457829641899297444122, 0.009030351006643606555540, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.4457829641899297444122, 0.009030351006643606555540},
    {0.009030351006643606555540, 0.5451866848034266490323, 0.4457829641899297444122},
    {0.2811298310112981910076, 0.005694926133132327941127, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.2811298310112981910076, 0.005694926133132327941127},
    {0.005694926133132327941127, 0.7131752428555694810513, 0.2811298310112981910076},
    {0.1414998546501169858844, 0.002866402392028585600815, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.1414998546501169858844, 0.002866402392028585600815},
    {0.002866402392028585600815, 0.8556337429578544285148, 0.1414998546501169858844},
    {0.04374774490514622342904, 0.0008862103848236273040833, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.04374774490514622342904, 0.0008862103848236273040833},
    {0.0008862103848236273040833, 0.9553660447100301492669, 0.04374774490514622342904},
    {0.8823609499485500312256, 0.09985913490408651696122, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.8823609499485500312256, 0.09985913490408651696122},
    {0.09985913490408651696122, 0.01777991514736345181321, 0.8823609499485500312256},
    {0.8162942062518003387245, 0.09238218584840570527171, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.8162942062518003387245, 0.09238218584840570527171},
    {0.09238218584840570527171, 0.09132360789979395600374, 0.8162942062518003387245},
    {0.7058128083290040090906, 0.07987871227536523255184, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.7058128083290040090906, 0.07987871227536523255184},
    {0.07987871227536523255184, 0.2143084793956307583575, 0.7058128083290040090906},
    {0.5642142127174868151328, 0.06385362269924088243633, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.5642142127174868151328, 0.06385362269924088243633},
    {0.06385362269924088243633, 0.3719321645832723024309, 0.5642142127174868151328},
    {0.4085739184475204768214, 0.04623939674905287414630, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.4085739184475204768214, 0.04623939674905287414630},
    {0.04623939674905287414630, 0.5451866848034266490323, 0.4085739184475204768214},
    {0.2576642130268514748913, 0.02916054411757904405738, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.2576642130268514748913, 0.02916054411757904405738},
    {0.02916054411757904405738, 0.7131752428555694810513, 0.2576642130268514748913},
    {0.1296890072486509343244, 0.01467724979349463716078, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.1296890072486509343244, 0.01467724979349463716078},
    {0.01467724979349463716078, 0.8556337429578544285148, 0.1296890072486509343244},
    {0.04009616561193372127728, 0.004537789678036129455842, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.04009616561193372127728, 0.004537789678036129455842},
    {0.004537789678036129455842, 0.9553660447100301492669, 0.04009616561193372127728},
    {0.7492042865567318887798, 0.2330157982959046594070, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.7492042865567318887798, 0.2330157982959046594070},
    {0.2330157982959046594070, 0.01777991514736345181321, 0.7492042865567318887798},
    {0.6931076431373512062518, 0.2155687489628548377444, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.6931076431373512062518, 0.2155687489628548377444},
    {0.2155687489628548377444, 0.09132360789979395600374, 0.6931076431373512062518},
    {0.5992989394392042296847, 0.1863925811651650119578, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.5992989394392042296847, 0.1863925811651650119578},
    {0.1863925811651650119578, 0.2143084793956307583575, 0.5992989394392042296847},
    {0.4790689192771064430109, 0.1489989161396212545582, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.4790689192771064430109, 0.1489989161396212545582},
    {0.1489989161396212545582, 0.3719321645832723024309, 0.4790689192771064430109},
    {0.3469162263969317382487, 0.1078970887996416127190, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.3469162263969317382487, 0.1078970887996416127190},
    {0.1078970887996416127190, 0.5451866848034266490323, 0.3469162263969317382487},
    {0.2187802314951044446632, 0.06804452564932607428544, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.2187802314951044446632, 0.06804452564932607428544},
    {0.06804452564932607428544, 0.7131752428555694810513, 0.2187802314951044446632},
    {0.1101177020080522670491, 0.03424855503409330443609, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.1101177020080522670491, 0.03424855503409330443609},
    {0.03424855503409330443609, 0.8556337429578544285148, 0.1101177020080522670491},
    {0.03404527268880269345508, 0.01058868260116715727804, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.03404527268880269345508, 0.01058868260116715727804},
    {0.01058868260116715727804, 0.9553660447100301492669, 0.03404527268880269345508},
    {0.5811966374848133748122, 0.4010234473678231733746, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.5811966374848133748122, 0.4010234473678231733746},
    {0.4010234473678231733746, 0.01777991514736345181321, 0.5811966374848133748122},
    {0.5376795606146721221503, 0.3709968314855339218460, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.5376795606146721221503, 0.3709968314855339218460},
    {0.3709968314855339218460, 0.09132360789979395600374, 0.5376795606146721221503},
    {0.4649072818991475930246, 0.3207842387052216486179, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.4649072818991475930246, 0.3207842387052216486179},
    {0.3207842387052216486179, 0.2143084793956307583575, 0.4649072818991475930246},
    {0.3716386171347058818486, 0.2564292182820218157205, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.3716386171347058818486, 0.2564292182820218157205},
    {0.2564292182820218157205, 0.3719321645832723024309, 0.3716386171347058818486},
    {0.2691209165359590370951, 0.1856923986606143138726, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.2691209165359590370951, 0.1856923986606143138726},
    {0.1856923986606143138726, 0.5451866848034266490323, 0.2691209165359590370951},
    {0.1697191769650603542082, 0.1171055801793701647405, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.1697191769650603542082, 0.1171055801793701647405},
    {0.1171055801793701647405, 0.7131752428555694810513, 0.1697191769650603542082},
    {0.08542401489555331522264, 0.05894224214659225626258, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.08542401489555331522264, 0.05894224214659225626258},
    {0.05894224214659225626258, 0.8556337429578544285148, 0.08542401489555331522264},
    {0.02641068446087614386315, 0.01822327082909370686997, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.02641068446087614386315, 0.01822327082909370686997},
    {0.01822327082909370686997, 0.9553660447100301492669, 0.02641068446087614386315},
    {0.4010234473678231733746, 0.5811966374848133748122, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.4010234473678231733746, 0.5811966374848133748122},
    {0.5811966374848133748122, 0.01777991514736345181321, 0.4010234473678231733746},
    {0.3709968314855339218460, 0.5376795606146721221503, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.3709968314855339218460, 0.5376795606146721221503},
    {0.5376795606146721221503, 0.09132360789979395600374, 0.3709968314855339218460},
    {0.3207842387052216486179, 0.4649072818991475930246, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.3207842387052216486179, 0.4649072818991475930246},
    {0.4649072818991475930246, 0.2143084793956307583575, 0.3207842387052216486179},
    {0.2564292182820218157205, 0.3716386171347058818486, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.2564292182820218157205, 0.3716386171347058818486},
    {0.3716386171347058818486, 0.3719321645832723024309, 0.2564292182820218157205},
    {0.1856923986606143138726, 0.2691209165359590370951, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.1856923986606143138726, 0.2691209165359590370951},
    {0.2691209165359590370951, 0.5451866848034266490323, 0.1856923986606143138726},
    {0.1171055801793701647405, 0.1697191769650603542082, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.1171055801793701647405, 0.1697191769650603542082},
    {0.1697191769650603542082, 0.7131752428555694810513, 0.1171055801793701647405},
    {0.05894224214659225626258, 0.08542401489555331522264, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.05894224214659225626258, 0.08542401489555331522264},
    {0.08542401489555331522264, 0.8556337429578544285148, 0.05894224214659225626258},
    {0.01822327082909370686997, 0.02641068446087614386315, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.01822327082909370686997, 0.02641068446087614386315},
    {0.02641068446087614386315, 0.9553660447100301492669, 0.01822327082909370686997},
    {0.2330157982959046594070, 0.7492042865567318887798, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.2330157982959046594070, 0.7492042865567318887798},
    {0.7492042865567318887798, 0.01777991514736345181321, 0.2330157982959046594070},
    {0.2155687489628548377444, 0.6931076431373512062518, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.2155687489628548377444, 0.6931076431373512062518},
    {0.6931076431373512062518, 0.09132360789979395600374, 0.2155687489628548377444},
    {0.1863925811651650119578, 0.5992989394392042296847, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.1863925811651650119578, 0.5992989394392042296847},
    {0.5992989394392042296847, 0.2143084793956307583575, 0.1863925811651650119578},
    {0.1489989161396212545582, 0.4790689192771064430109, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.1489989161396212545582, 0.4790689192771064430109},
    {0.4790689192771064430109, 0.3719321645832723024309, 0.1489989161396212545582},
    {0.1078970887996416127190, 0.3469162263969317382487, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.1078970887996416127190, 0.3469162263969317382487},
    {0.3469162263969317382487, 0.5451866848034266490323, 0.1078970887996416127190},
    {0.06804452564932607428544, 0.2187802314951044446632, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.06804452564932607428544, 0.2187802314951044446632},
    {0.2187802314951044446632, 0.7131752428555694810513, 0.06804452564932607428544},
    {0.03424855503409330443609, 0.1101177020080522670491, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.03424855503409330443609, 0.1101177020080522670491},
    {0.1101177020080522670491, 0.8556337429578544285148, 0.03424855503409330443609},
    {0.01058868260116715727804, 0.03404527268880269345508, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.01058868260116715727804, 0.03404527268880269345508},
    {0.03404527268880269345508, 0.9553660447100301492669, 0.01058868260116715727804},
    {0.09985913490408651696122, 0.8823609499485500312256, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.09985913490408651696122, 0.8823609499485500312256},
    {0.8823609499485500312256, 0.01777991514736345181321, 0.09985913490408651696122},
    {0.09238218584840570527171, 0.8162942062518003387245, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.09238218584840570527171, 0.8162942062518003387245},
    {0.8162942062518003387245, 0.09132360789979395600374, 0.09238218584840570527171},
    {0.07987871227536523255184, 0.7058128083290040090906, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.07987871227536523255184, 0.7058128083290040090906},
    {0.7058128083290040090906, 0.2143084793956307583575, 0.07987871227536523255184},
    {0.06385362269924088243633, 0.5642142127174868151328, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.06385362269924088243633, 0.5642142127174868151328},
    {0.5642142127174868151328, 0.3719321645832723024309, 0.06385362269924088243633},
    {0.04623939674905287414630, 0.4085739184475204768214, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.04623939674905287414630, 0.4085739184475204768214},
    {0.4085739184475204768214, 0.5451866848034266490323, 0.04623939674905287414630},
    {0.02916054411757904405738, 0.2576642130268514748913, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.02916054411757904405738, 0.2576642130268514748913},
    {0.2576642130268514748913, 0.7131752428555694810513, 0.02916054411757904405738},
    {0.01467724979349463716078, 0.1296890072486509343244, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.01467724979349463716078, 0.1296890072486509343244},
    {0.1296890072486509343244, 0.8556337429578544285148, 0.01467724979349463716078},
    {0.004537789678036129455842, 0.04009616561193372127728, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.004537789678036129455842, 0.04009616561193372127728},
    {0.04009616561193372127728, 0.9553660447100301492669, 0.004537789678036129455842},
    {0.01950205026025016820334, 0.9627180345923863799835, 0.01777991514736345181321},
    {0.01777991514736345181321, 0.01950205026025016820334, 0.9627180345923863799835},
    {0.9627180345923863799835, 0.01777991514736345181321, 0.01950205026025016820334},
    {0.01804183496380010824571, 0.8906345571364059357506, 0.09132360789979395600374},
    {0.09132360789979395600374, 0.01804183496380010824571, 0.8906345571364059357506},
    {0.8906345571364059357506, 0.09132360789979395600374, 0.01804183496380010824571},
    {0.01559996151593423559378, 0.7700915590884350060487, 0.2143084793956307583575},
    {0.2143084793956307583575, 0.01559996151593423559378, 0.7700915590884350060487},
    {0.7700915590884350060487, 0.2143084793956307583575, 0.01559996151593423559378},
    {0.01247033193684002640218, 0.6155975034798876711670, 0.3719321645832723024309},
    {0.3719321645832723024309, 0.01247033193684002640218, 0.6155975034798876711670},
    {0.6155975034798876711670, 0.3719321645832723024309, 0.01247033193684002640218},
    {0.009030351006643606555540, 0.4457829641899297444122, 0.5451866848034266490323},
    {0.5451866848034266490323, 0.009030351006643606555540, 0.4457829641899297444122},
    {0.4457829641899297444122, 0.5451866848034266490323, 0.009030351006643606555540},
    {0.005694926133132327941127, 0.2811298310112981910076, 0.7131752428555694810513},
    {0.7131752428555694810513, 0.005694926133132327941127, 0.2811298310112981910076},
    {0.2811298310112981910076, 0.7131752428555694810513, 0.005694926133132327941127},
    {0.002866402392028585600815, 0.1414998546501169858844, 0.8556337429578544285148},
    {0.8556337429578544285148, 0.002866402392028585600815, 0.1414998546501169858844},
    {0.1414998546501169858844, 0.8556337429578544285148, 0.002866402392028585600815},
    {0.0008862103848236273040833, 0.04374774490514622342904, 0.9553660447100301492669},
    {0.9553660447100301492669, 0.0008862103848236273040833, 0.04374774490514622342904},
    {0.04374774490514622342904, 0.9553660447100301492669, 0.0008862103848236273040833},
};
static const double wts_d15[] = {
    0.001503270905359739174338,
    0.001503270905359739174338,
    0.001503270905359739174338,
    0.003074615130306099921717,
    0.003074615130306099921717,
    0.003074615130306099921717,
    0.003796265801538838627262,
    0.003796265801538838627262,
    0.003796265801538838627262,
    0.003578339657719538769364,
    0.003578339657719538769364,
    0.003578339657719538769364,
    0.002672419843797165083566,
    0.002672419843797165083566,
    0.002672419843797165083566,
    0.001533251934497138063324,
    0.001533251934497138063324,
    0.001533251934497138063324,
    0.0006020703063457169458461,
    0.0006020703063457169458461,
    0.0006020703063457169458461,
    0.0001111891354984732733386,
    0.0001111891354984732733386,
    0.0001111891354984732733386,
    0.003302417986550905065634,
    0.003302417986550905065634,
    0.003302417986550905065634,
    0.006754380911546082044917,
    0.006754380911546082044917,
    0.006754380911546082044917,
    0.008339718689446614218366,
    0.008339718689446614218366,
    0.008339718689446614218366,
    0.007860973830803645989665,
    0.007860973830803645989665,
    0.007860973830803645989665,
    0.005870829621131628790914,
    0.005870829621131628790914,
    0.005870829621131628790914,
    0.003368280958770778745570,
    0.003368280958770778745570,
    0.003368280958770778745570,
    0.001322641050096358618977,
    0.001322641050096358618977,
    0.001322641050096358618977,
    0.0002442626938830649500158,
    0.0002442626938830649500158,
    0.0002442626938830649500158,
    0.004658627802475220995296,
    0.004658627802475220995296,
    0.004658627802475220995296,
    0.009528214426878234257473,
    0.009528214426878234257473,
    0.009528214426878234257473,
    0.01176460566460742064064,
    0.01176460566460742064064,
    0.01176460566460742064064,
    0.01108925381095077493916,
    0.01108925381095077493916,
    0.01108925381095077493916,
    0.008281813570535822849052,
    0.008281813570535822849052,
    0.008281813570535822849052,
    0.004751538837597584663765,
    0.004751538837597584663765,
    0.004751538837597584663765,
    0.001865812381645026670770,
    0.001865812381645026670770,
    0.001865812381645026670770,
    0.0003445744849577962068320,
    0.0003445744849577962068320,
    0.0003445744849577962068320,
    0.005385951426132778540137,
    0.005385951426132778540137,
    0.005385951426132778540137,
    0.01101579741006079255780,
    0.01101579741006079255780,
    0.01101579741006079255780,
    0.01360134300136958190432,
    0.01360134300136958190432,
    0.01360134300136958190432,
    0.01282055251250271053665,
    0.01282055251250271053665,
    0.01282055251250271053665,
    0.009574803461975103316604,
    0.009574803461975103316604,
    0.009574803461975103316604,
    0.005493368104034131221693,
    0.005493368104034131221693,
    0.005493368104034131221693,
    0.002157110480574967228924,
    0.002157110480574967228924,
    0.002157110480574967228924,
    0.0003983708330769318547277,
    0.0003983708330769318547277,
    0.0003983708330769318547277,
    0.005385951426132778540137,
    0.005385951426132778540137,
    0.005385951426132778540137,
    0.01101579741006079255780,
    0.01101579741006079255780,
    0.01101579741006079255780,
    0.01360134300136958190432,
    0.01360134300136958190432,
    0.01360134300136958190432,
    0.01282055251250271053665,
    0.01282055251250271053665,
    0.01282055251250271053665,
    0.009574803461975103316604,
    0.009574803461975103316604,
    0.009574803461975103316604,
    0.005493368104034131221693,
    0.005493368104034131221693,
    0.005493368104034131221693,
    0.002157110480574967228924,
    0.002157110480574967228924,
    0.002157110480574967228924,
    0.0003983708330769318547277,
    0.0003983708330769318547277,
    0.0003983708330769318547277,
    0.004658627802475220995296,
    0.004658627802475220995296,
    0.004658627802475220995296,
    0.009528214426878234257473,
    0.009528214426878234257473,
    0.009528214426878234257473,
    0.01176460566460742064064,
    0.01176460566460742064064,
    0.01176460566460742064064,
    0.01108925381095077493916,
    0.01108925381095077493916,
    0.01108925381095077493916,
    0.008281813570535822849052,
    0.008281813570535822849052,
    0.008281813570535822849052,
    0.004751538837597584663765,
    0.004751538837597584663765,
    0.004751538837597584663765,
    0.001865812381645026670770,
    0.001865812381645026670770,
    0.001865812381645026670770,
    0.0003445744849577962068320,
    0.0003445744849577962068320,
    0.0003445744849577962068320,
    0.003302417986550905065634,
    0.003302417986550905065634,
    0.003302417986550905065634,
    0.006754380911546082044917,
    0.006754380911546082044917,
    0.006754380911546082044917,
    0.008339718689446614218366,
    0.008339718689446614218366,
    0.008339718689446614218366,
    0.007860973830803645989665,
    0.007860973830803645989665,
    0.007860973830803645989665,
    0.005870829621131628790914,
    0.005870829621131628790914,
    0.005870829621131628790914,
    0.003368280958770778745570,
    0.003368280958770778745570,
    0.003368280958770778745570,
    0.001322641050096358618977,
    0.001322641050096358618977,
    0.001322641050096358618977,
    0.0002442626938830649500158,
    0.0002442626938830649500158,
    0.0002442626938830649500158,
    0.001503270905359739174338,
    0.001503270905359739174338,
    0.001503270905359739174338,
    0.003074615130306099921717,
    0.003074615130306099921717,
    0.003074615130306099921717,
    0.003796265801538838627262,
    0.003796265801538838627262,
    0.003796265801538838627262,
    0.003578339657719538769364,
    0.003578339657719538769364,
    0.003578339657719538769364,
    0.002672419843797165083566,
    0.002672419843797165083566,
    0.002672419843797165083566,
    0.001533251934497138063324,
    0.001533251934497138063324,
    0.001533251934497138063324,
    0.0006020703063457169458461,
    0.0006020703063457169458461,
    0.0006020703063457169458461,
    0.0001111891354984732733386,
    0.0001111891354984732733386,
    0.0001111891354984732733386,
};

static const double pts_d17[][3] = {
    {0.9698971539406056003209, 0.01569043641051785104631, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.9698971539406056003209, 0.01569043641051785104631},
    {0.01569043641051785104631, 0.01441240964887654863283, 0.9698971539406056003209},
    {0.9108769683806138411780, 0.01473564191019011418611, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.9108769683806138411780, 0.01473564191019011418611},
    {0.01473564191019011418611, 0.07438738970919604463592, 0.9108769683806138411780},
    {0.8107672196662915317025, 0.01311612417071318643436, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.8107672196662915317025, 0.01311612417071318643436},
    {0.01311612417071318643436, 0.1761166561629952818632, 0.8107672196662915317025},
    {0.6793424106147497491793, 0.01099000945761243376110, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.6793424106147497491793, 0.01099000945761243376110},
    {0.01099000945761243376110, 0.3096675799276378170596, 0.6793424106147497491793},
    {0.5294642321352947607769, 0.008565366783694304339942, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.5294642321352947607769, 0.008565366783694304339942},
    {0.008565366783694304339942, 0.4619704010810109348831, 0.5294642321352947607769},
    {0.3758032374129723376090, 0.006079527891733637751767, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.3758032374129723376090, 0.006079527891733637751767},
    {0.006079527891733637751767, 0.6181172346952940246392, 0.3758032374129723376090},
    {0.2334011556195545140711, 0.003775829195405871246180, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.2334011556195545140711, 0.003775829195405871246180},
    {0.003775829195405871246180, 0.7628230151850396146827, 0.2334011556195545140711},
    {0.1161991755880698714375, 0.001879803201928828754744, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.1161991755880698714375, 0.001879803201928828754744},
    {0.001879803201928828754744, 0.8819210212100012998077, 0.1161991755880698714375},
    {0.03568059284412011175646, 0.0005772200390893491847060, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.03568059284412011175646, 0.0005772200390893491847060},
    {0.0005772200390893491847060, 0.9637421871167905390588, 0.03568059284412011175646},
    {0.9047847374398819472667, 0.08080285291124150410051, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.9047847374398819472667, 0.08080285291124150410051},
    {0.08080285291124150410051, 0.01441240964887654863283, 0.9047847374398819472667},
    {0.8497267729138612941315, 0.07588583737694266123258, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.8497267729138612941315, 0.07588583737694266123258},
    {0.07588583737694266123258, 0.07438738970919604463592, 0.8497267729138612941315},
    {0.7563377240465135953146, 0.06754561979049112282220, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.7563377240465135953146, 0.06754561979049112282220},
    {0.06754561979049112282220, 0.1761166561629952818632, 0.7563377240465135953146},
    {0.6337358988244677186050, 0.05659652124789446433541, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.6337358988244677186050, 0.05659652124789446433541},
    {0.05659652124789446433541, 0.3096675799276378170596, 0.6337358988244677186050},
    {0.4939195401388686109735, 0.04411005878012045414340, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.4939195401388686109735, 0.04411005878012045414340},
    {0.04411005878012045414340, 0.4619704010810109348831, 0.4939195401388686109735},
    {0.3505743182256785423129, 0.03130844707902743304791, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.3505743182256785423129, 0.03130844707902743304791},
    {0.03130844707902743304791, 0.6181172346952940246392, 0.3505743182256785423129},
    {0.2177321610311021996199, 0.01944482378385818569738, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.2177321610311021996199, 0.01944482378385818569738},
    {0.01944482378385818569738, 0.7628230151850396146827, 0.2177321610311021996199},
    {0.1083983390898998275349, 0.009680639700098872657416, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.1083983390898998275349, 0.009680639700098872657416},
    {0.009680639700098872657416, 0.8819210212100012998077, 0.1083983390898998275349},
    {0.03328523616860051389767, 0.002972576714608947043491, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.03328523616860051389767, 0.002972576714608947043491},
    {0.002972576714608947043491, 0.9637421871167905390588, 0.03328523616860051389767},
    {0.7950594313483573135238, 0.1905281590027661378433, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.7950594313483573135238, 0.1905281590027661378433},
    {0.1905281590027661378433, 0.01441240964887654863283, 0.7950594313483573135238},
    {0.7466784715953038101473, 0.1789341386955001452168, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.7466784715953038101473, 0.1789341386955001452168},
    {0.1789341386955001452168, 0.07438738970919604463592, 0.7466784715953038101473},
    {0.6646149254122307179430, 0.1592684184247740001938, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.6646149254122307179430, 0.1592684184247740001938},
    {0.1592684184247740001938, 0.1761166561629952818632, 0.6646149254122307179430},
    {0.5568813028059063915834, 0.1334511172664557913570, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.5568813028059063915834, 0.1334511172664557913570},
    {0.1334511172664557913570, 0.3096675799276378170596, 0.5568813028059063915834},
    {0.4340207924216267052252, 0.1040088064973623598916, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.4340207924216267052252, 0.1040088064973623598916},
    {0.1040088064973623598916, 0.4619704010810109348831, 0.4340207924216267052252},
    {0.3080593720916583970385, 0.07382339321304757832230, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.3080593720916583970385, 0.07382339321304757832230},
    {0.07382339321304757832230, 0.6181172346952940246392, 0.3080593720916583970385},
    {0.1913272858972594049533, 0.04584969891770098036398, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.1913272858972594049533, 0.04584969891770098036398},
    {0.04584969891770098036398, 0.7628230151850396146827, 0.1913272858972594049533},
    {0.09525262559112141443583, 0.02282635319887728575646, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.09525262559112141443583, 0.02282635319887728575646},
    {0.02282635319887728575646, 0.8819210212100012998077, 0.09525262559112141443583},
    {0.02924865975898678614399, 0.007009153124222674797171, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.02924865975898678614399, 0.007009153124222674797171},
    {0.007009153124222674797171, 0.9637421871167905390588, 0.02924865975898678614399},
    {0.6525838702933930358510, 0.3330037200577304155162, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.6525838702933930358510, 0.3330037200577304155162},
    {0.3330037200577304155162, 0.01441240964887654863283, 0.6525838702933930358510},
    {0.6128728339616664000895, 0.3127397763291375552746, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.6128728339616664000895, 0.3127397763291375552746},
    {0.3127397763291375552746, 0.07438738970919604463592, 0.6128728339616664000895},
    {0.5455151692807654513937, 0.2783681745562392667431, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.5455151692807654513937, 0.2783681745562392667431},
    {0.2783681745562392667431, 0.1761166561629952818632, 0.5455151692807654513937},
    {0.4570875352837309618423, 0.2332448847886312210981, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.4570875352837309618423, 0.2332448847886312210981},
    {0.2332448847886312210981, 0.3096675799276378170596, 0.4570875352837309618423},
    {0.3562437691305247626555, 0.1817858297884643024613, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.3562437691305247626555, 0.1817858297884643024613},
    {0.1817858297884643024613, 0.4619704010810109348831, 0.3562437691305247626555},
    {0.2528547796468350981780, 0.1290279856578708771828, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.2528547796468350981780, 0.1290279856578708771828},
    {0.1290279856578708771828, 0.6181172346952940246392, 0.2528547796468350981780},
    {0.1570412170469022480483, 0.08013576776805813726903, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.1570412170469022480483, 0.08013576776805813726903},
    {0.08013576776805813726903, 0.7628230151850396146827, 0.1570412170469022480483},
    {0.07818324594734076143117, 0.03989573284265793876112, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.07818324594734076143117, 0.03989573284265793876112},
    {0.03989573284265793876112, 0.8819210212100012998077, 0.07818324594734076143117},
    {0.02400726641786242823349, 0.01225054646534703270768, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.02400726641786242823349, 0.01225054646534703270768},
    {0.01225054646534703270768, 0.9637421871167905390588, 0.02400726641786242823349},
    {0.4927937951755617256836, 0.4927937951755617256836, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.4927937951755617256836, 0.4927937951755617256836},
    {0.4927937951755617256836, 0.01441240964887654863283, 0.4927937951755617256836},
    {0.4628063051454019776820, 0.4628063051454019776820, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.4628063051454019776820, 0.4628063051454019776820},
    {0.4628063051454019776820, 0.07438738970919604463592, 0.4628063051454019776820},
    {0.4119416719185023590684, 0.4119416719185023590684, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.4119416719185023590684, 0.4119416719185023590684},
    {0.4119416719185023590684, 0.1761166561629952818632, 0.4119416719185023590684},
    {0.3451662100361810914702, 0.3451662100361810914702, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.3451662100361810914702, 0.3451662100361810914702},
    {0.3451662100361810914702, 0.3096675799276378170596, 0.3451662100361810914702},
    {0.2690147994594945325584, 0.2690147994594945325584, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.2690147994594945325584, 0.2690147994594945325584},
    {0.2690147994594945325584, 0.4619704010810109348831, 0.2690147994594945325584},
    {0.1909413826523529876804, 0.1909413826523529876804, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.1909413826523529876804, 0.1909413826523529876804},
    {0.1909413826523529876804, 0.6181172346952940246392, 0.1909413826523529876804},
    {0.1185884924074801926587, 0.1185884924074801926587, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.1185884924074801926587, 0.1185884924074801926587},
    {0.1185884924074801926587, 0.7628230151850396146827, 0.1185884924074801926587},
    {0.05903948939499935009614, 0.05903948939499935009614, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.05903948939499935009614, 0.05903948939499935009614},
    {0.05903948939499935009614, 0.8819210212100012998077, 0.05903948939499935009614},
    {0.01812890644160473047058, 0.01812890644160473047058, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.01812890644160473047058, 0.01812890644160473047058},
    {0.01812890644160473047058, 0.9637421871167905390588, 0.01812890644160473047058},
    {0.3330037200577304155162, 0.6525838702933930358510, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.3330037200577304155162, 0.6525838702933930358510},
    {0.6525838702933930358510, 0.01441240964887654863283, 0.3330037200577304155162},
    {0.3127397763291375552746, 0.6128728339616664000895, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.3127397763291375552746, 0.6128728339616664000895},
    {0.6128728339616664000895, 0.07438738970919604463592, 0.3127397763291375552746},
    {0.2783681745562392667431, 0.5455151692807654513937, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.2783681745562392667431, 0.5455151692807654513937},
    {0.5455151692807654513937, 0.1761166561629952818632, 0.2783681745562392667431},
    {0.2332448847886312210981, 0.4570875352837309618423, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.2332448847886312210981, 0.4570875352837309618423},
    {0.4570875352837309618423, 0.3096675799276378170596, 0.2332448847886312210981},
    {0.1817858297884643024613, 0.3562437691305247626555, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.1817858297884643024613, 0.3562437691305247626555},
    {0.3562437691305247626555, 0.4619704010810109348831, 0.1817858297884643024613},
    {0.1290279856578708771828, 0.2528547796468350981780, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.1290279856578708771828, 0.2528547796468350981780},
    {0.2528547796468350981780, 0.6181172346952940246392, 0.1290279856578708771828},
    {0.08013576776805813726903, 0.1570412170469022480483, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.08013576776805813726903, 0.1570412170469022480483},
    {0.1570412170469022480483, 0.7628230151850396146827, 0.08013576776805813726903},
    {0.03989573284265793876112, 0.07818324594734076143117, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.03989573284265793876112, 0.07818324594734076143117},
    {0.07818324594734076143117, 0.8819210212100012998077, 0.03989573284265793876112},
    {0.01225054646534703270768, 0.02400726641786242823349, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.01225054646534703270768, 0.02400726641786242823349},
    {0.02400726641786242823349, 0.9637421871167905390588, 0.01225054646534703270768},
    {0.1905281590027661378433, 0.7950594313483573135238, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.1905281590027661378433, 0.7950594313483573135238},
    {0.7950594313483573135238, 0.01441240964887654863283, 0.1905281590027661378433},
    {0.1789341386955001452168, 0.7466784715953038101473, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.1789341386955001452168, 0.7466784715953038101473},
    {0.7466784715953038101473, 0.07438738970919604463592, 0.1789341386955001452168},
    {0.1592684184247740001938, 0.6646149254122307179430, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.1592684184247740001938, 0.6646149254122307179430},
    {0.6646149254122307179430, 0.1761166561629952818632, 0.1592684184247740001938},
    {0.1334511172664557913570, 0.5568813028059063915834, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.1334511172664557913570, 0.5568813028059063915834},
    {0.5568813028059063915834, 0.3096675799276378170596, 0.1334511172664557913570},
    {0.1040088064973623598916, 0.4340207924216267052252, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.1040088064973623598916, 0.4340207924216267052252},
    {0.4340207924216267052252, 0.4619704010810109348831, 0.1040088064973623598916},
    {0.07382339321304757832230, 0.3080593720916583970385, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.07382339321304757832230, 0.3080593720916583970385},
    {0.3080593720916583970385, 0.6181172346952940246392, 0.07382339321304757832230},
    {0.04584969891770098036398, 0.1913272858972594049533, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.04584969891770098036398, 0.1913272858972594049533},
    {0.1913272858972594049533, 0.7628230151850396146827, 0.04584969891770098036398},
    {0.02282635319887728575646, 0.09525262559112141443583, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.02282635319887728575646, 0.09525262559112141443583},
    {0.09525262559112141443583, 0.8819210212100012998077, 0.02282635319887728575646},
    {0.007009153124222674797171, 0.02924865975898678614399, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.007009153124222674797171, 0.02924865975898678614399},
    {0.02924865975898678614399, 0.9637421871167905390588, 0.007009153124222674797171},
    {0.08080285291124150410051, 0.9047847374398819472667, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.08080285291124150410051, 0.9047847374398819472667},
    {0.9047847374398819472667, 0.01441240964887654863283, 0.08080285291124150410051},
    {0.07588583737694266123258, 0.8497267729138612941315, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.07588583737694266123258, 0.8497267729138612941315},
    {0.8497267729138612941315, 0.07438738970919604463592, 0.07588583737694266123258},
    {0.06754561979049112282220, 0.7563377240465135953146, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.06754561979049112282220, 0.7563377240465135953146},
    {0.7563377240465135953146, 0.1761166561629952818632, 0.06754561979049112282220},
    {0.05659652124789446433541, 0.6337358988244677186050, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.05659652124789446433541, 0.6337358988244677186050},
    {0.6337358988244677186050, 0.3096675799276378170596, 0.05659652124789446433541},
    {0.04411005878012045414340, 0.4939195401388686109735, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.04411005878012045414340, 0.4939195401388686109735},
    {0.4939195401388686109735, 0.4619704010810109348831, 0.04411005878012045414340},
    {0.03130844707902743304791, 0.3505743182256785423129, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.03130844707902743304791, 0.3505743182256785423129},
    {0.3505743182256785423129, 0.6181172346952940246392, 0.03130844707902743304791},
    {0.01944482378385818569738, 0.2177321610311021996199, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.01944482378385818569738, 0.2177321610311021996199},
    {0.2177321610311021996199, 0.7628230151850396146827, 0.01944482378385818569738},
    {0.009680639700098872657416, 0.1083983390898998275349, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.009680639700098872657416, 0.1083983390898998275349},
    {0.1083983390898998275349, 0.8819210212100012998077, 0.009680639700098872657416},
    {0.002972576714608947043491, 0.03328523616860051389767, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.002972576714608947043491, 0.03328523616860051389767},
    {0.03328523616860051389767, 0.9637421871167905390588, 0.002972576714608947043491},
    {0.01569043641051785104631, 0.9698971539406056003209, 0.01441240964887654863283},
    {0.01441240964887654863283, 0.01569043641051785104631, 0.9698971539406056003209},
    {0.9698971539406056003209, 0.01441240964887654863283, 0.01569043641051785104631},
    {0.01473564191019011418611, 0.9108769683806138411780, 0.07438738970919604463592},
    {0.07438738970919604463592, 0.01473564191019011418611, 0.9108769683806138411780},
    {0.9108769683806138411780, 0.07438738970919604463592, 0.01473564191019011418611},
    {0.01311612417071318643436, 0.8107672196662915317025, 0.1761166561629952818632},
    {0.1761166561629952818632, 0.01311612417071318643436, 0.8107672196662915317025},
    {0.8107672196662915317025, 0.1761166561629952818632, 0.01311612417071318643436},
    {0.01099000945761243376110, 0.6793424106147497491793, 0.3096675799276378170596},
    {0.3096675799276378170596, 0.01099000945761243376110, 0.6793424106147497491793},
    {0.6793424106147497491793, 0.3096675799276378170596, 0.01099000945761243376110},
    {0.008565366783694304339942, 0.5294642321352947607769, 0.4619704010810109348831},
    {0.4619704010810109348831, 0.008565366783694304339942, 0.5294642321352947607769},
    {0.5294642321352947607769, 0.4619704010810109348831, 0.008565366783694304339942},
    {0.006079527891733637751767, 0.3758032374129723376090, 0.6181172346952940246392},
    {0.6181172346952940246392, 0.006079527891733637751767, 0.3758032374129723376090},
    {0.3758032374129723376090, 0.6181172346952940246392, 0.006079527891733637751767},
    {0.003775829195405871246180, 0.2334011556195545140711, 0.7628230151850396146827},
    {0.7628230151850396146827, 0.003775829195405871246180, 0.2334011556195545140711},
    {0.2334011556195545140711, 0.7628230151850396146827, 0.003775829195405871246180},
    {0.001879803201928828754744, 0.1161991755880698714375, 0.8819210212100012998077},
    {0.8819210212100012998077, 0.001879803201928828754744, 0.1161991755880698714375},
    {0.1161991755880698714375, 0.8819210212100012998077, 0.001879803201928828754744},
    {0.0005772200390893491847060, 0.03568059284412011175646, 0.9637421871167905390588},
    {0.9637421871167905390588, 0.0005772200390893491847060, 0.03568059284412011175646},
    {0.03568059284412011175646, 0.9637421871167905390588, 0.0005772200390893491847060},
};
static const double wts_d17[] = {
    0.0009828241824445376990153,
    0.0009828241824445376990153,
    0.0009828241824445376990153,
    0.002060962851357132691483,
    0.002060962851357132691483,
    0.002060962851357132691483,
    0.002669423209344822532226,
    0.002669423209344822532226,
    0.002669423209344822532226,
    0.002717512371489626699980,
    0.002717512371489626699980,
    0.002717512371489626699980,
    0.002285390337051580973926,
    0.002285390337051580973926,
    0.002285390337051580973926,
    0.001582173809066467189162,
    0.001582173809066467189162,
    0.001582173809066467189162,
    0.0008616391378781570186646,
    0.0008616391378781570186646,
    0.0008616391378781570186646,
    0.0003267231572946327838090,
    0.0003267231572946327838090,
    0.0003267231572946327838090,
    0.00005908233766877774038312,
    0.00005908233766877774038312,
    0.00005908233766877774038312,
    0.002184518203387355098944,
    0.002184518203387355098944,
    0.002184518203387355098944,
    0.004580891420575959288003,
    0.004580891420575959288003,
    0.004580891420575959288003,
    0.005933313096605184939710,
    0.005933313096605184939710,
    0.005933313096605184939710,
    0.006040200627424461496223,
    0.006040200627424461496223,
    0.006040200627424461496223,
    0.005079725226863223664173,
    0.005079725226863223664173,
    0.005079725226863223664173,
    0.003516689504150912358869,
    0.003516689504150912358869,
    0.003516689504150912358869,
    0.001915160834529059162126,
    0.001915160834529059162126,
    0.001915160834529059162126,
    0.0007262058640061926636190,
    0.0007262058640061926636190,
    0.0007262058640061926636190,
    0.0001313220049338853380780,
    0.0001313220049338853380780,
    0.0001313220049338853380780,
    0.003151478587436704541848,
    0.003151478587436704541848,
    0.003151478587436704541848,
    0.006608588200790457160500,
    0.006608588200790457160500,
    0.006608588200790457160500,
    0.008559649055574101710204,
    0.008559649055574101710204,
    0.008559649055574101710204,
    0.008713849539744294986023,
    0.008713849539744294986023,
    0.008713849539744294986023,
    0.007328227001129218577738,
    0.007328227001129218577738,
    0.007328227001129218577738,
    0.005073325392212272508559,
    0.005073325392212272508559,
    0.005073325392212272508559,
    0.002762892225918210497952,
    0.002762892225918210497952,
    0.002762892225918210497952,
    0.001047655371760101082450,
    0.001047655371760101082450,
    0.001047655371760101082450,
    0.0001894506925905493211822,
    0.0001894506925905493211822,
    0.0001894506925905493211822,
    0.003777109453781130825436,
    0.003777109453781130825436,
    0.003777109453781130825436,
    0.007920523740462635444869,
    0.007920523740462635444869,
    0.007920523740462635444869,
    0.01025890878578181358992,
    0.01025890878578181358992,
    0.01025890878578181358992,
    0.01044372111763731676987,
    0.01044372111763731676987,
    0.01044372111763731676987,
    0.008783025084086896962778,
    0.008783025084086896962778,
    0.008783025084086896962778,
    0.006080480882029062730932,
    0.006080480882029062730932,
    0.006080480882029062730932,
    0.003311381009503260710254,
    0.003311381009503260710254,
    0.003311381009503260710254,
    0.001255635695814207713925,
    0.001255635695814207713925,
    0.001255635695814207713925,
    0.0002270604042374819301218,
    0.0002270604042374819301218,
    0.0002270604042374819301218,
    0.003993474828087124642613,
    0.003993474828087124642613,
    0.003993474828087124642613,
    0.008374237646499739217012,
    0.008374237646499739217012,
    0.008374237646499739217012,
    0.01084657315361862456266,
    0.01084657315361862456266,
    0.01084657315361862456266,
    0.01104197214965412653191,
    0.01104197214965412653191,
    0.01104197214965412653191,
    0.009286145931685059238938,
    0.009286145931685059238938,
    0.009286145931685059238938,
    0.006428791021859310802109,
    0.006428791021859310802109,
    0.006428791021859310802109,
    0.003501067911711959396466,
    0.003501067911711959396466,
    0.003501067911711959396466,
    0.001327562678773317546878,
    0.001327562678773317546878,
    0.001327562678773317546878,
    0.0002400671783206985888358,
    0.0002400671783206985888358,
    0.0002400671783206985888358,
    0.003777109453781130825436,
    0.003777109453781130825436,
    0.003777109453781130825436,
    0.007920523740462635444869,
    0.007920523740462635444869,
    0.007920523740462635444869,
    0.01025890878578181358992,
    0.01025890878578181358992,
    0.01025890878578181358992,
    0.01044372111763731676987,
    0.01044372111763731676987,
    0.01044372111763731676987,
    0.008783025084086896962778,
    0.008783025084086896962778,
    0.008783025084086896962778,
    0.006080480882029062730932,
    0.006080480882029062730932,
    0.006080480882029062730932,
    0.003311381009503260710254,
    0.003311381009503260710254,
    0.003311381009503260710254,
    0.001255635695814207713925,
    0.001255635695814207713925,
    0.001255635695814207713925,
    0.0002270604042374819301218,
    0.0002270604042374819301218,
    0.0002270604042374819301218,
    0.003151478587436704541848,
    0.003151478587436704541848,
    0.003151478587436704541848,
    0.006608588200790457160500,
    0.006608588200790457160500,
    0.006608588200790457160500,
    0.008559649055574101710204,
    0.008559649055574101710204,
    0.008559649055574101710204,
    0.008713849539744294986023,
    0.008713849539744294986023,
    0.008713849539744294986023,
    0.007328227001129218577738,
    0.007328227001129218577738,
    0.007328227001129218577738,
    0.005073325392212272508559,
    0.005073325392212272508559,
    0.005073325392212272508559,
    0.002762892225918210497952,
    0.002762892225918210497952,
    0.002762892225918210497952,
    0.001047655371760101082450,
    0.001047655371760101082450,
    0.001047655371760101082450,
    0.0001894506925905493211822,
    0.0001894506925905493211822,
    0.0001894506925905493211822,
    0.002184518203387355098944,
    0.002184518203387355098944,
    0.002184518203387355098944,
    0.004580891420575959288003,
    0.004580891420575959288003,
    0.004580891420575959288003,
    0.005933313096605184939710,
    0.005933313096605184939710,
    0.005933313096605184939710,
    0.006040200627424461496223,
    0.006040200627424461496223,
    0.006040200627424461496223,
    0.005079725226863223664173,
    0.005079725226863223664173,
    0.005079725226863223664173,
    0.003516689504150912358869,
    0.003516689504150912358869,
    0.003516689504150912358869,
    0.001915160834529059162126,
    0.001915160834529059162126,
    0.001915160834529059162126,
    0.0007262058640061926636190,
    0.0007262058640061926636190,
    0.0007262058640061926636190,
    0.0001313220049338853380780,
    0.0001313220049338853380780,
    0.0001313220049338853380780,
    0.0009828241824445376990153,
    0.0009828241824445376990153,
    0.0009828241824445376990153,
    0.002060962851357132691483,
    0.002060962851357132691483,
    0.002060962851357132691483,
    0.002669423209344822532226,
    0.002669423209344822532226,
    0.002669423209344822532226,
    0.002717512371489626699980,
    0.002717512371489626699980,
    0.002717512371489626699980,
    0.002285390337051580973926,
    0.002285390337051580973926,
    0.002285390337051580973926,
    0.001582173809066467189162,
    0.001582173809066467189162,
    0.001582173809066467189162,
    0.0008616391378781570186646,
    0.0008616391378781570186646,
    0.0008616391378781570186646,
    0.0003267231572946327838090,
    0.0003267231572946327838090,
    0.0003267231572946327838090,
    0.00005908233766877774038312,
    0.00005908233766877774038312,
    0.00005908233766877774038312,
};

static const double pts_d19[][3] = {
    {0.9751911367792913169454, 0.01289124978829308614489, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.9751911367792913169454, 0.01289124978829308614489},
    {0.01289124978829308614489, 0.01191761343241559690975, 0.9751911367792913169454},
    {0.9260265944099888696446, 0.01224133371286300483277, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.9260265944099888696446, 0.01224133371286300483277},
    {0.01224133371286300483277, 0.06173207187714812552263, 0.9260265944099888696446},
    {0.8417611388235451105402, 0.01112741153338464903224, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.8417611388235451105402, 0.01112741153338464903224},
    {0.01112741153338464903224, 0.1471114496430702404276, 0.8417611388235451105402},
    {0.7292008695293252826791, 0.009639454462218477054863, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.7292008695293252826791, 0.009639454462218477054863},
    {0.009639454462218477054863, 0.2611596760084562402661, 0.7292008695293252826791},
    {0.5974621791681500159568, 0.007897973946063141081233, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.5974621791681500159568, 0.007897973946063141081233},
    {0.007897973946063141081233, 0.3946398468857868429620, 0.5974621791681500159568},
    {0.4572171873813902471597, 0.006044046902949119967176, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.4572171873813902471597, 0.006044046902949119967176},
    {0.006044046902949119967176, 0.5367387657156606328731, 0.4572171873813902471597},
    {0.3198276713492886397367, 0.004227866974046252906165, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.3198276713492886397367, 0.004227866974046252906165},
    {0.004227866974046252906165, 0.6759444616766651073572, 0.3198276713492886397367},
    {0.1964245035388984572228, 0.002596575424202697639221, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.1964245035388984572228, 0.002596575424202697639221},
    {0.002596575424202697639221, 0.8009789210368988451379, 0.1964245035388984572228},
    {0.09700666144126664671986, 0.001282350768586582931340, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.09700666144126664671986, 0.001282350768586582931340},
    {0.001282350768586582931340, 0.9017109877901467703488, 0.09700666144126664671986},
    {0.02963725131430515645619, 0.0003917808471813405868694, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.02963725131430515645619, 0.0003917808471813405868694},
    {0.0003917808471813405868694, 0.9699709678385135029569, 0.02963725131430515645619},
    {0.9214181312289128064944, 0.06666425533867159659581, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.9214181312289128064944, 0.06666425533867159659581},
    {0.06666425533867159659581, 0.01191761343241559690975, 0.9214181312289128064944},
    {0.8749645704405521239628, 0.06330335768229975051461, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.8749645704405521239628, 0.06330335768229975051461},
    {0.06330335768229975051461, 0.06173207187714812552263, 0.8749645704405521239628},
    {0.7953455955695914596952, 0.05754295478733829987723, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.7953455955695914596952, 0.05754295478733829987723},
    {0.05754295478733829987723, 0.1471114496430702404276, 0.7953455955695914596952},
    {0.6889920110546243496001, 0.04984831293691941013387, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.6889920110546243496001, 0.04984831293691941013387},
    {0.04984831293691941013387, 0.2611596760084562402661, 0.6889920110546243496001},
    {0.5645175226132767710085, 0.04084263050093638602956, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.5645175226132767710085, 0.04084263050093638602956},
    {0.04084263050093638602956, 0.3946398468857868429620, 0.5645175226132767710085},
    {0.4320057786354221979923, 0.03125545564891716913463, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.4320057786354221979923, 0.03125545564891716913463},
    {0.03125545564891716913463, 0.5367387657156606328731, 0.4320057786354221979923},
    {0.3021920566497651088697, 0.02186348167356978377312, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.3021920566497651088697, 0.02186348167356978377312},
    {0.02186348167356978377312, 0.6759444616766651073572, 0.3021920566497651088697},
    {0.1855934617864978352001, 0.01342761717660331966192, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.1855934617864978352001, 0.01342761717660331966192},
    {0.01342761717660331966192, 0.8009789210368988451379, 0.1855934617864978352001},
    {0.09165761801032178492349, 0.006631394199531444727708, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.09165761801032178492349, 0.006631394199531444727708},
    {0.006631394199531444727708, 0.9017109877901467703488, 0.09165761801032178492349},
    {0.02800302391075689988511, 0.002026008250729597157951, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.02800302391075689988511, 0.002026008250729597157951},
    {0.002026008250729597157951, 0.9699709678385135029569, 0.02800302391075689988511},
    {0.8296975071346683370757, 0.1583848794329160660146, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.8296975071346683370757, 0.1583848794329160660146},
    {0.1583848794329160660146, 0.01191761343241559690975, 0.8296975071346683370757},
    {0.7878680680588093637698, 0.1503998600640425107075, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.7878680680588093637698, 0.1503998600640425107075},
    {0.1503998600640425107075, 0.06173207187714812552263, 0.7878680680588093637698},
    {0.7161745960810560728422, 0.1367139542758736867302, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.7161745960810560728422, 0.1367139542758736867302},
    {0.1367139542758736867302, 0.1471114496430702404276, 0.7161745960810560728422},
    {0.6204077547782749151857, 0.1184325692132688445482, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.6204077547782749151857, 0.1184325692132688445482},
    {0.1184325692132688445482, 0.2611596760084562402661, 0.6204077547782749151857},
    {0.5083238167034860165320, 0.09703633641072714050601, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.5083238167034860165320, 0.09703633641072714050601},
    {0.09703633641072714050601, 0.3946398468857868429620, 0.5083238167034860165320},
    {0.3890026747395677906126, 0.07425855954477157651428, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.3890026747395677906126, 0.07425855954477157651428},
    {0.07425855954477157651428, 0.5367387657156606328731, 0.3890026747395677906126},
    {0.2721109858602499056534, 0.05194455246308498698948, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.2721109858602499056534, 0.05194455246308498698948},
    {0.05194455246308498698948, 0.6759444616766651073572, 0.2721109858602499056534},
    {0.1671189521519138791961, 0.03190212681118727566593, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.1671189521519138791961, 0.03190212681118727566593},
    {0.03190212681118727566593, 0.8009789210368988451379, 0.1671189521519138791961},
    {0.08253375378194357563367, 0.01575525842790965401753, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.08253375378194357563367, 0.01575525842790965401753},
    {0.01575525842790965401753, 0.9017109877901467703488, 0.08253375378194357563367},
    {0.02521552196937977887440, 0.004813510192106718168661, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.02521552196937977887440, 0.004813510192106718168661},
    {0.004813510192106718168661, 0.9699709678385135029569, 0.02521552196937977887440},
    {0.7081563709631049129190, 0.2799260156044794901713, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.7081563709631049129190, 0.2799260156044794901713},
    {0.2799260156044794901713, 0.01191761343241559690975, 0.7081563709631049129190},
    {0.6724544633152437184735, 0.2658134648076081560038, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.6724544633152437184735, 0.2658134648076081560038},
    {0.2658134648076081560038, 0.06173207187714812552263, 0.6724544633152437184735},
    {0.6112632598935968112755, 0.2416252904633329482969, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.6112632598935968112755, 0.2416252904633329482969},
    {0.2416252904633329482969, 0.1471114496430702404276, 0.6112632598935968112755},
    {0.5295251587032197782386, 0.2093151652883239814953, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.5295251587032197782386, 0.2093151652883239814953},
    {0.2093151652883239814953, 0.2611596760084562402661, 0.5295251587032197782386},
    {0.4338602276316444972222, 0.1714999254825686598159, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.4338602276316444972222, 0.1714999254825686598159},
    {0.1714999254825686598159, 0.3946398468857868429620, 0.4338602276316444972222},
    {0.3320182597509010741550, 0.1312429745334382929719, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.3320182597509010741550, 0.1312429745334382929719},
    {0.1312429745334382929719, 0.5367387657156606328731, 0.3320182597509010741550},
    {0.2322498580373709929125, 0.09180568028596389973036, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.2322498580373709929125, 0.09180568028596389973036},
    {0.09180568028596389973036, 0.6759444616766651073572, 0.2322498580373709929125},
    {0.1426379489601712033506, 0.05638313000292995151147, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.1426379489601712033506, 0.05638313000292995151147},
    {0.05638313000292995151147, 0.8009789210368988451379, 0.1426379489601712033506},
    {0.07044350869755847975631, 0.02784550351229474989489, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.07044350869755847975631, 0.02784550351229474989489},
    {0.02784550351229474989489, 0.9017109877901467703488, 0.07044350869755847975631},
    {0.02152173819521688855201, 0.008507293966269608491056, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.02152173819521688855201, 0.008507293966269608491056},
    {0.008507293966269608491056, 0.9699709678385135029569, 0.02152173819521688855201},
    {0.5675912493636130664699, 0.4204911372039713366204, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.5675912493636130664699, 0.4204911372039713366204},
    {0.4204911372039713366204, 0.01191761343241559690975, 0.5675912493636130664699},
    {0.5389759728549030561899, 0.3992919552679488182874, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.5389759728549030561899, 0.3992919552679488182874},
    {0.3992919552679488182874, 0.06173207187714812552263, 0.5389759728549030561899},
    {0.4899308847581596808390, 0.3629576655987700787334, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.4899308847581596808390, 0.3629576655987700787334},
    {0.3629576655987700787334, 0.1471114496430702404276, 0.4899308847581596808390},
    {0.4244173444193795382264, 0.3144229795721642215076, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.4244173444193795382264, 0.3144229795721642215076},
    {0.3144229795721642215076, 0.2611596760084562402661, 0.4244173444193795382264},
    {0.3477413728774553496530, 0.2576187802367578073851, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.3477413728774553496530, 0.2576187802367578073851},
    {0.2576187802367578073851, 0.3946398468857868429620, 0.3477413728774553496530},
    {0.2661144721571174902709, 0.1971467621272218768560, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.2661144721571174902709, 0.1971467621272218768560},
    {0.1971467621272218768560, 0.5367387657156606328731, 0.2661144721571174902709},
    {0.1861495461922790176078, 0.1379059921310558750350, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.1861495461922790176078, 0.1379059921310558750350},
    {0.1379059921310558750350, 0.6759444616766651073572, 0.1861495461922790176078},
    {0.1143251052685719342267, 0.08469597369452922063539, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.1143251052685719342267, 0.08469597369452922063539},
    {0.08469597369452922063539, 0.8009789210368988451379, 0.1143251052685719342267},
    {0.05646086196587630418246, 0.04182815024397692546874, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.05646086196587630418246, 0.04182815024397692546874},
    {0.04182815024397692546874, 0.9017109877901467703488, 0.05646086196587630418246},
    {0.01724979223739297179433, 0.01277923992409352524873, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.01724979223739297179433, 0.01277923992409352524873},
    {0.01277923992409352524873, 0.9699709678385135029569, 0.01724979223739297179433},
    {0.4204911372039713366204, 0.5675912493636130664699, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.4204911372039713366204, 0.5675912493636130664699},
    {0.5675912493636130664699, 0.01191761343241559690975, 0.4204911372039713366204},
    {0.3992919552679488182874, 0.5389759728549030561899, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.3992919552679488182874, 0.5389759728549030561899},
    {0.5389759728549030561899, 0.06173207187714812552263, 0.3992919552679488182874},
    {0.3629576655987700787334, 0.4899308847581596808390, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.3629576655987700787334, 0.4899308847581596808390},
    {0.4899308847581596808390, 0.1471114496430702404276, 0.3629576655987700787334},
    {0.3144229795721642215076, 0.4244173444193795382264, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.3144229795721642215076, 0.4244173444193795382264},
    {0.4244173444193795382264, 0.2611596760084562402661, 0.3144229795721642215076},
    {0.2576187802367578073851, 0.3477413728774553496530, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.2576187802367578073851, 0.3477413728774553496530},
    {0.3477413728774553496530, 0.3946398468857868429620, 0.2576187802367578073851},
    {0.1971467621272218768560, 0.2661144721571174902709, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.1971467621272218768560, 0.2661144721571174902709},
    {0.2661144721571174902709, 0.5367387657156606328731, 0.1971467621272218768560},
    {0.1379059921310558750350, 0.1861495461922790176078, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.1379059921310558750350, 0.1861495461922790176078},
    {0.1861495461922790176078, 0.6759444616766651073572, 0.1379059921310558750350},
    {0.08469597369452922063539, 0.1143251052685719342267, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.08469597369452922063539, 0.1143251052685719342267},
    {0.1143251052685719342267, 0.8009789210368988451379, 0.08469597369452922063539},
    {0.04182815024397692546874, 0.05646086196587630418246, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.04182815024397692546874, 0.05646086196587630418246},
    {0.05646086196587630418246, 0.9017109877901467703488, 0.04182815024397692546874},
    {0.01277923992409352524873, 0.01724979223739297179433, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.01277923992409352524873, 0.01724979223739297179433},
    {0.01724979223739297179433, 0.9699709678385135029569, 0.01277923992409352524873},
    {0.2799260156044794901713, 0.7081563709631049129190, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.2799260156044794901713, 0.7081563709631049129190},
    {0.7081563709631049129190, 0.01191761343241559690975, 0.2799260156044794901713},
    {0.2658134648076081560038, 0.6724544633152437184735, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.2658134648076081560038, 0.6724544633152437184735},
    {0.6724544633152437184735, 0.06173207187714812552263, 0.2658134648076081560038},
    {0.2416252904633329482969, 0.6112632598935968112755, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.2416252904633329482969, 0.6112632598935968112755},
    {0.6112632598935968112755, 0.1471114496430702404276, 0.2416252904633329482969},
    {0.2093151652883239814953, 0.5295251587032197782386, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.2093151652883239814953, 0.5295251587032197782386},
    {0.5295251587032197782386, 0.2611596760084562402661, 0.2093151652883239814953},
    {0.1714999254825686598159, 0.4338602276316444972222, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.1714999254825686598159, 0.4338602276316444972222},
    {0.4338602276316444972222, 0.3946398468857868429620, 0.1714999254825686598159},
    {0.1312429745334382929719, 0.3320182597509010741550, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.1312429745334382929719, 0.3320182597509010741550},
    {0.3320182597509010741550, 0.5367387657156606328731, 0.1312429745334382929719},
    {0.09180568028596389973036, 0.2322498580373709929125, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.09180568028596389973036, 0.2322498580373709929125},
    {0.2322498580373709929125, 0.6759444616766651073572, 0.09180568028596389973036},
    {0.05638313000292995151147, 0.1426379489601712033506, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.05638313000292995151147, 0.1426379489601712033506},
    {0.1426379489601712033506, 0.8009789210368988451379, 0.05638313000292995151147},
    {0.02784550351229474989489, 0.07044350869755847975631, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.02784550351229474989489, 0.07044350869755847975631},
    {0.07044350869755847975631, 0.9017109877901467703488, 0.02784550351229474989489},
    {0.008507293966269608491056, 0.02152173819521688855201, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.008507293966269608491056, 0.02152173819521688855201},
    {0.02152173819521688855201, 0.9699709678385135029569, 0.008507293966269608491056},
    {0.1583848794329160660146, 0.8296975071346683370757, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.1583848794329160660146, 0.8296975071346683370757},
    {0.8296975071346683370757, 0.01191761343241559690975, 0.1583848794329160660146},
    {0.1503998600640425107075, 0.7878680680588093637698, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.1503998600640425107075, 0.7878680680588093637698},
    {0.7878680680588093637698, 0.06173207187714812552263, 0.1503998600640425107075},
    {0.1367139542758736867302, 0.7161745960810560728422, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.1367139542758736867302, 0.7161745960810560728422},
    {0.7161745960810560728422, 0.1471114496430702404276, 0.1367139542758736867302},
    {0.1184325692132688445482, 0.6204077547782749151857, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.1184325692132688445482, 0.6204077547782749151857},
    {0.6204077547782749151857, 0.2611596760084562402661, 0.1184325692132688445482},
    {0.09703633641072714050601, 0.5083238167034860165320, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.09703633641072714050601, 0.5083238167034860165320},
    {0.5083238167034860165320, 0.3946398468857868429620, 0.09703633641072714050601},
    {0.07425855954477157651428, 0.3890026747395677906126, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.07425855954477157651428, 0.3890026747395677906126},
    {0.3890026747395677906126, 0.5367387657156606328731, 0.07425855954477157651428},
    {0.05194455246308498698948, 0.2721109858602499056534, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.05194455246308498698948, 0.2721109858602499056534},
    {0.2721109858602499056534, 0.6759444616766651073572, 0.05194455246308498698948},
    {0.03190212681118727566593, 0.1671189521519138791961, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.03190212681118727566593, 0.1671189521519138791961},
    {0.1671189521519138791961, 0.8009789210368988451379, 0.03190212681118727566593},
    {0.01575525842790965401753, 0.08253375378194357563367, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.01575525842790965401753, 0.08253375378194357563367},
    {0.08253375378194357563367, 0.9017109877901467703488, 0.01575525842790965401753},
    {0.004813510192106718168661, 0.02521552196937977887440, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.004813510192106718168661, 0.02521552196937977887440},
    {0.02521552196937977887440, 0.9699709678385135029569, 0.004813510192106718168661},
    {0.06666425533867159659581, 0.9214181312289128064944, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.06666425533867159659581, 0.9214181312289128064944},
    {0.9214181312289128064944, 0.01191761343241559690975, 0.06666425533867159659581},
    {0.06330335768229975051461, 0.8749645704405521239628, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.06330335768229975051461, 0.8749645704405521239628},
    {0.8749645704405521239628, 0.06173207187714812552263, 0.06330335768229975051461},
    {0.05754295478733829987723, 0.7953455955695914596952, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.05754295478733829987723, 0.7953455955695914596952},
    {0.7953455955695914596952, 0.1471114496430702404276, 0.05754295478733829987723},
    {0.04984831293691941013387, 0.6889920110546243496001, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.04984831293691941013387, 0.6889920110546243496001},
    {0.6889920110546243496001, 0.2611596760084562402661, 0.04984831293691941013387},
    {0.04084263050093638602956, 0.5645175226132767710085, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.04084263050093638602956, 0.5645175226132767710085},
    {0.5645175226132767710085, 0.3946398468857868429620, 0.04084263050093638602956},
    {0.03125545564891716913463, 0.4320057786354221979923, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.03125545564891716913463, 0.4320057786354221979923},
    {0.4320057786354221979923, 0.5367387657156606328731, 0.03125545564891716913463},
    {0.02186348167356978377312, 0.3021920566497651088697, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.02186348167356978377312, 0.3021920566497651088697},
    {0.3021920566497651088697, 0.6759444616766651073572, 0.02186348167356978377312},
    {0.01342761717660331966192, 0.1855934617864978352001, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.01342761717660331966192, 0.1855934617864978352001},
    {0.1855934617864978352001, 0.8009789210368988451379, 0.01342761717660331966192},
    {0.006631394199531444727708, 0.09165761801032178492349, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.006631394199531444727708, 0.09165761801032178492349},
    {0.09165761801032178492349, 0.9017109877901467703488, 0.006631394199531444727708},
    {0.002026008250729597157951, 0.02800302391075689988511, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.002026008250729597157951, 0.02800302391075689988511},
    {0.02800302391075689988511, 0.9699709678385135029569, 0.002026008250729597157951},
    {0.01289124978829308614489, 0.9751911367792913169454, 0.01191761343241559690975},
    {0.01191761343241559690975, 0.01289124978829308614489, 0.9751911367792913169454},
    {0.9751911367792913169454, 0.01191761343241559690975, 0.01289124978829308614489},
    {0.01224133371286300483277, 0.9260265944099888696446, 0.06173207187714812552263},
    {0.06173207187714812552263, 0.01224133371286300483277, 0.9260265944099888696446},
    {0.9260265944099888696446, 0.06173207187714812552263, 0.01224133371286300483277},
    {0.01112741153338464903224, 0.8417611388235451105402, 0.1471114496430702404276},
    {0.1471114496430702404276, 0.01112741153338464903224, 0.8417611388235451105402},
    {0.8417611388235451105402, 0.1471114496430702404276, 0.01112741153338464903224},
    {0.009639454462218477054863, 0.7292008695293252826791, 0.2611596760084562402661},
    {0.2611596760084562402661, 0.009639454462218477054863, 0.7292008695293252826791},
    {0.7292008695293252826791, 0.2611596760084562402661, 0.009639454462218477054863},
    {0.007897973946063141081233, 0.5974621791681500159568, 0.3946398468857868429620},
    {0.3946398468857868429620, 0.007897973946063141081233, 0.5974621791681500159568},
    {0.5974621791681500159568, 0.3946398468857868429620, 0.007897973946063141081233},
    {0.006044046902949119967176, 0.4572171873813902471597, 0.5367387657156606328731},
    {0.5367387657156606328731, 0.006044046902949119967176, 0.4572171873813902471597},
    {0.4572171873813902471597, 0.5367387657156606328731, 0.006044046902949119967176},
    {0.004227866974046252906165, 0.3198276713492886397367, 0.6759444616766651073572},
    {0.6759444616766651073572, 0.004227866974046252906165, 0.3198276713492886397367},
    {0.3198276713492886397367, 0.6759444616766651073572, 0.004227866974046252906165},
    {0.002596575424202697639221, 0.1964245035388984572228, 0.8009789210368988451379},
    {0.8009789210368988451379, 0.002596575424202697639221, 0.1964245035388984572228},
    {0.1964245035388984572228, 0.8009789210368988451379, 0.002596575424202697639221},
    {0.001282350768586582931340, 0.09700666144126664671986, 0.9017109877901467703488},
    {0.9017109877901467703488, 0.001282350768586582931340, 0.09700666144126664671986},
    {0.09700666144126664671986, 0.9017109877901467703488, 0.001282350768586582931340},
    {0.0003917808471813405868694, 0.02963725131430515645619, 0.9699709678385135029569},
    {0.9699709678385135029569, 0.0003917808471813405868694, 0.02963725131430515645619},
    {0.02963725131430515645619, 0.9699709678385135029569, 0.0003917808471813405868694},
};
static const double wts_d19[] = {
    0.0006689248876642312412122,
    0.0006689248876642312412122,
    0.0006689248876642312412122,
    0.001428703670966959112380,
    0.001428703670966959112380,
    0.001428703670966959112380,
    0.001915941094959786909019,
    0.001915941094959786909019,
    0.001915941094959786909019,
    0.002060075504911118154909,
    0.002060075504911118154909,
    0.002060075504911118154909,
    0.001879178724648219811948,
    0.001879178724648219811948,
    0.001879178724648219811948,
    0.001467949114510642599963,
    0.001467949114510642599963,
    0.001467949114510642599963,
    0.0009645544819081990325084,
    0.0009645544819081990325084,
    0.0009645544819081990325084,
    0.0005061375427567352627397,
    0.0005061375427567352627397,
    0.0005061375427567352627397,
    0.0001871091226987405260478,
    0.0001871091226987405260478,
    0.0001871091226987405260478,
    0.00003331657309005694820154,
    0.00003331657309005694820154,
    0.00003331657309005694820154,
    0.001499470694320353109961,
    0.001499470694320353109961,
    0.001499470694320353109961,
    0.003202600658144740375388,
    0.003202600658144740375388,
    0.003202600658144740375388,
    0.004294798380081065825367,
    0.004294798380081065825367,
    0.004294798380081065825367,
    0.004617891940734562993216,
    0.004617891940734562993216,
    0.004617891940734562993216,
    0.004212391374522592496590,
    0.004212391374522592496590,
    0.004212391374522592496590,
    0.003290573752829320141154,
    0.003290573752829320141154,
    0.003290573752829320141154,
    0.002162157822751963033584,
    0.002162157822751963033584,
    0.002162157822751963033584,
    0.001134564473014480720522,
    0.001134564473014480720522,
    0.001134564473014480720522,
    0.0004194262334990035902244,
    0.0004194262334990035902244,
    0.0004194262334990035902244,
    0.00007468286186534990495550,
    0.00007468286186534990495550,
    0.00007468286186534990495550,
    0.002198130575502295220584,
    0.002198130575502295220584,
    0.002198130575502295220584,
    0.004694812945965938078333,
    0.004694812945965938078333,
    0.004694812945965938078333,
    0.006295906729376202912462,
    0.006295906729376202912462,
    0.006295906729376202912462,
    0.006769541750794385430503,
    0.006769541750794385430503,
    0.006769541750794385430503,
    0.006175103195676085108341,
    0.006175103195676085108341,
    0.006175103195676085108341,
    0.004823776019389245348062,
    0.004823776019389245348062,
    0.004823776019389245348062,
    0.003169588600333908600213,
    0.003169588600333908600213,
    0.003169588600333908600213,
    0.001663200799760990362560,
    0.001663200799760990362560,
    0.001663200799760990362560,
    0.0006148527153708779563812,
    0.0006148527153708779563812,
    0.0006148527153708779563812,
    0.0001094804204937449818179,
    0.0001094804204937449818179,
    0.0001094804204937449818179,
    0.002701598592825786725395,
    0.002701598592825786725395,
    0.002701598592825786725395,
    0.005770130396145167891695,
    0.005770130396145167891695,
    0.005770130396145167891695,
    0.007737944665438457133267,
    0.007737944665438457133267,
    0.007737944665438457133267,
    0.008320062816942708914121,
    0.008320062816942708914121,
    0.008320062816942708914121,
    0.007589471840261525333443,
    0.007589471840261525333443,
    0.007589471840261525333443,
    0.005928631652426215304220,
    0.005928631652426215304220,
    0.005928631652426215304220,
    0.003895562983350986657054,
    0.003895562983350986657054,
    0.003895562983350986657054,
    0.002044146508081872989252,
    0.002044146508081872989252,
    0.002044146508081872989252,
    0.0007556808722618777843830,
    0.0007556808722618777843830,
    0.0007556808722618777843830,
    0.0001345562239314604490409,
    0.0001345562239314604490409,
    0.0001345562239314604490409,
    0.002965044591033008136400,
    0.002965044591033008136400,
    0.002965044591033008136400,
    0.006332803831804718833812,
    0.006332803831804718833812,
    0.006332803831804718833812,
    0.008492509226536499362664,
    0.008492509226536499362664,
    0.008492509226536499362664,
    0.009131392545858363122169,
    0.009131392545858363122169,
    0.009131392545858363122169,
    0.008329558095167354726561,
    0.008329558095167354726561,
    0.008329558095167354726561,
    0.006506761315294702995293,
    0.006506761315294702995293,
    0.006506761315294702995293,
    0.004275438247371817984126,
    0.004275438247371817984126,
    0.004275438247371817984126,
    0.002243481160806931527089,
    0.002243481160806931527089,
    0.002243481160806931527089,
    0.0008293709838305626154691,
    0.0008293709838305626154691,
    0.0008293709838305626154691,
    0.0001476774547548523920668,
    0.0001476774547548523920668,
    0.0001476774547548523920668,
    0.002965044591033008136400,
    0.002965044591033008136400,
    0.002965044591033008136400,
    0.006332803831804718833812,
    0.006332803831804718833812,
    0.006332803831804718833812,
    0.008492509226536499362664,
    0.008492509226536499362664,
    0.008492509226536499362664,
    0.009131392545858363122169,
    0.009131392545858363122169,
    0.009131392545858363122169,
    0.008329558095167354726561,
    0.008329558095167354726561,
    0.008329558095167354726561,
    0.006506761315294702995293,
    0.006506761315294702995293,
    0.006506761315294702995293,
    0.004275438247371817984126,
    0.004275438247371817984126,
    0.004275438247371817984126,
    0.002243481160806931527089,
    0.002243481160806931527089,
    0.002243481160806931527089,
    0.0008293709838305626154691,
    0.0008293709838305626154691,
    0.0008293709838305626154691,
    0.0001476774547548523920668,
    0.0001476774547548523920668,
    0.0001476774547548523920668,
    0.002701598592825786725395,
    0.002701598592825786725395,
    0.002701598592825786725395,
    0.005770130396145167891695,
    0.005770130396145167891695,
    0.005770130396145167891695,
    0.007737944665438457133267,
    0.007737944665438457133267,
    0.007737944665438457133267,
    0.008320062816942708914121,
    0.008320062816942708914121,
    0.008320062816942708914121,
    0.007589471840261525333443,
    0.007589471840261525333443,
    0.007589471840261525333443,
    0.005928631652426215304220,
    0.005928631652426215304220,
    0.005928631652426215304220,
    0.003895562983350986657054,
    0.003895562983350986657054,
    0.003895562983350986657054,
    0.002044146508081872989252,
    0.002044146508081872989252,
    0.002044146508081872989252,
    0.0007556808722618777843830,
    0.0007556808722618777843830,
    0.0007556808722618777843830,
    0.0001345562239314604490409,
    0.0001345562239314604490409,
    0.0001345562239314604490409,
    0.002198130575502295220584,
    0.002198130575502295220584,
    0.002198130575502295220584,
    0.004694812945965938078333,
    0.004694812945965938078333,
    0.004694812945965938078333,
    0.006295906729376202912462,
    0.006295906729376202912462,
    0.006295906729376202912462,
    0.006769541750794385430503,
    0.006769541750794385430503,
    0.006769541750794385430503,
    0.006175103195676085108341,
    0.006175103195676085108341,
    0.006175103195676085108341,
    0.004823776019389245348062,
    0.004823776019389245348062,
    0.004823776019389245348062,
    0.003169588600333908600213,
    0.003169588600333908600213,
    0.003169588600333908600213,
    0.001663200799760990362560,
    0.001663200799760990362560,
    0.001663200799760990362560,
    0.0006148527153708779563812,
    0.0006148527153708779563812,
    0.0006148527153708779563812,
    0.0001094804204937449818179,
    0.0001094804204937449818179,
    0.0001094804204937449818179,
    0.001499470694320353109961,
    0.001499470694320353109961,
    0.001499470694320353109961,
    0.003202600658144740375388,
    0.003202600658144740375388,
    0.003202600658144740375388,
    0.004294798380081065825367,
    0.004294798380081065825367,
    0.004294798380081065825367,
    0.004617891940734562993216,
    0.004617891940734562993216,
    0.004617891940734562993216,
    0.004212391374522592496590,
    0.004212391374522592496590,
    0.004212391374522592496590,
    0.003290573752829320141154,
    0.003290573752829320141154,
    0.003290573752829320141154,
    0.002162157822751963033584,
    0.002162157822751963033584,
    0.002162157822751963033584,
    0.001134564473014480720522,
    0.001134564473014480720522,
    0.001134564473014480720522,
    0.0004194262334990035902244,
    0.0004194262334990035902244,
    0.0004194262334990035902244,
    0.00007468286186534990495550,
    0.00007468286186534990495550,
    0.00007468286186534990495550,
    0.0006689248876642312412122,
    0.0006689248876642312412122,
    0.0006689248876642312412122,
    0.001428703670966959112380,
    0.001428703670966959112380,
    0.001428703670966959112380,
    0.001915941094959786909019,
    0.001915941094959786909019,
    0.001915941094959786909019,
    0.002060075504911118154909,
    0.002060075504911118154909,
    0.002060075504911118154909,
    0.001879178724648219811948,
    0.001879178724648219811948,
    0.001879178724648219811948,
    0.001467949114510642599963,
    0.001467949114510642599963,
    0.001467949114510642599963,
    0.0009645544819081990325084,
    0.0009645544819081990325084,
    0.0009645544819081990325084,
    0.0005061375427567352627397,
    0.0005061375427567352627397,
    0.0005061375427567352627397,
    0.0001871091226987405260478,
    0.0001871091226987405260478,
    0.0001871091226987405260478,
    0.00003331657309005694820154,
    0.00003331657309005694820154,
    0.00003331657309005694820154,
};

static const double pts_d21[][3] = {
    {0.9792051043157080516054, 0.01077661522261154255153, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.9792051043157080516054, 0.01077661522261154255153},
    {0.01077661522261154255153, 0.01001828046168040584302, 0.9792051043157080516054},
    {0.9376453187433549397160, 0.01031923012946450770042, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.9376453187433549397160, 0.01031923012946450770042},
    {0.01031923012946450770042, 0.05203545112718055258354, 0.9376453187433549397160},
    {0.8658516678046820028105, 0.009529107050874923454197, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.8658516678046820028105, 0.009529107050874923454197},
    {0.009529107050874923454197, 0.1246192251444430737353, 0.8658516678046820028105},
    {0.7686994915466364278968, 0.008459901409525716595341, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.7686994915466364278968, 0.008459901409525716595341},
    {0.008459901409525716595341, 0.2228406070438378555078, 0.7686994915466364278968},
    {0.6528073880779081149457, 0.007184454007426696820678, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.6528073880779081149457, 0.007184454007426696820678},
    {0.007184454007426696820678, 0.3400081579146651882336, 0.6528073880779081149457},
    {0.5260727079880755737347, 0.005789678922340384182203, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.5260727079880755737347, 0.005789678922340384182203},
    {0.005789678922340384182203, 0.4681376130895840420831, 0.5260727079880755737347},
    {0.3971320937441219904920, 0.004370626488738826280268, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.3971320937441219904920, 0.004370626488738826280268},
    {0.004370626488738826280268, 0.5984972797671391832277, 0.3971320937441219904920},
    {0.2747727114837614985557, 0.003024003625270575880946, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.2747727114837614985557, 0.003024003625270575880946},
    {0.003024003625270575880946, 0.7222032848909679255633, 0.2747727114837614985557},
    {0.1673335159054380562682, 0.001841584471743369701216, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.1673335159054380562682, 0.001841584471743369701216},
    {0.001841584471743369701216, 0.8308248996228185740306, 0.1673335159054380562682},
    {0.08213764977017192264497, 0.0009039636772332240619001, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.08213764977017192264497, 0.0009039636772332240619001},
    {0.0009039636772332240619001, 0.9169583865525948532931, 0.08213764977017192264497},
    {0.02499850008273974850638, 0.0002751203147806012469546, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.02499850008273974850638, 0.0002751203147806012469546},
    {0.0002751203147806012469546, 0.9747263796024796502467, 0.02499850008273974850638},
    {0.9340787386974353791951, 0.05590298084088421496187, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.9340787386974353791951, 0.05590298084088421496187},
    {0.05590298084088421496187, 0.01001828046168040584302, 0.9340787386974353791951},
    {0.8944342230419661502893, 0.05353032583085329712718, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.8944342230419661502893, 0.05353032583085329712718},
    {0.05353032583085329712718, 0.05203545112718055258354, 0.8944342230419661502893},
    {0.8259491603929684804684, 0.04943161446258844579628, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.8259491603929684804684, 0.04943161446258844579628},
    {0.04943161446258844579628, 0.1246192251444430737353, 0.8259491603929684804684},
    {0.7332742122530250529063, 0.04388518070313709158590, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.7332742122530250529063, 0.04388518070313709158590},
    {0.04388518070313709158590, 0.2228406070438378555078, 0.7332742122530250529063},
    {0.6227229606756430605054, 0.03726888140969175126101, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.6227229606756430605054, 0.03726888140969175126101},
    {0.03726888140969175126101, 0.3400081579146651882336, 0.6227229606756430605054},
    {0.5018288092810170584293, 0.03003357762939889948764, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.5018288092810170584293, 0.03003357762939889948764},
    {0.03003357762939889948764, 0.4681376130895840420831, 0.5018288092810170584293},
    {0.3788303835282922850402, 0.02267233670456853173212, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.3788303835282922850402, 0.02267233670456853173212},
    {0.02267233670456853173212, 0.5984972797671391832277, 0.3788303835282922850402},
    {0.2621098957103434928673, 0.01568681939868858156937, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.2621098957103434928673, 0.01568681939868858156937},
    {0.01568681939868858156937, 0.7222032848909679255633, 0.2621098957103434928673},
    {0.1596220023668962306523, 0.009553098010285195317090, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.1596220023668962306523, 0.009553098010285195317090},
    {0.009553098010285195317090, 0.8308248996228185740306, 0.1596220023668962306523},
    {0.07835236148049878943360, 0.004689251966906357273264, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.07835236148049878943360, 0.004689251966906357273264},
    {0.004689251966906357273264, 0.9169583865525948532931, 0.07835236148049878943360},
    {0.02384645190644835668943, 0.001427168491071993063903, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.02384645190644835668943, 0.001427168491071993063903},
    {0.001427168491071993063903, 0.9747263796024796502467, 0.02384645190644835668943},
    {0.8564094287704348285636, 0.1335722907678847655933, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.8564094287704348285636, 0.1335722907678847655933},
    {0.1335722907678847655933, 0.01001828046168040584302, 0.8564094287704348285636},
    {0.8200613827227037327478, 0.1279031661501157146687, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.8200613827227037327478, 0.1279031661501157146687},
    {0.1279031661501157146687, 0.05203545112718055258354, 0.8200613827227037327478},
    {0.7572709016286535717494, 0.1181098732269033545153, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.7572709016286535717494, 0.1181098732269033545153},
    {0.1181098732269033545153, 0.1246192251444430737353, 0.7572709016286535717494},
    {0.6723019411869073178188, 0.1048574517692548266734, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.6723019411869073178188, 0.1048574517692548266734},
    {0.1048574517692548266734, 0.2228406070438378555078, 0.6723019411869073178188},
    {0.5709431046232266382651, 0.08904873746210817350130, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.5709431046232266382651, 0.08904873746210817350130},
    {0.08904873746210817350130, 0.3400081579146651882336, 0.5709431046232266382651},
    {0.4601013877012285843453, 0.07176099920918737357162, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.4601013877012285843453, 0.07176099920918737357162},
    {0.07176099920918737357162, 0.4681376130895840420831, 0.4601013877012285843453},
    {0.3473303683271602870979, 0.05417235190570052967436, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.3473303683271602870979, 0.05417235190570052967436},
    {0.05417235190570052967436, 0.5984972797671391832277, 0.3473303683271602870979},
    {0.2403152718938873268698, 0.03748144321514474756686, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.2403152718938873268698, 0.03748144321514474756686},
    {0.03748144321514474756686, 0.7222032848909679255633, 0.2403152718938873268698},
    {0.1463493196053857762074, 0.02282578077179564976207, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.1463493196053857762074, 0.02282578077179564976207},
    {0.02282578077179564976207, 0.8308248996228185740306, 0.1463493196053857762074},
    {0.07183730702606647934666, 0.01120430642133866736021, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.07183730702606647934666, 0.01120430642133866736021},
    {0.01120430642133866736021, 0.9169583865525948532931, 0.07183730702606647934666},
    {0.02186360250944351743031, 0.003410017888076832323023, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.02186360250944351743031, 0.003410017888076832323023},
    {0.003410017888076832323023, 0.9747263796024796502467, 0.02186360250944351743031},
    {0.7519386990680824398999, 0.2380430204702371542571, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.7519386990680824398999, 0.2380430204702371542571},
    {0.2380430204702371542571, 0.01001828046168040584302, 0.7519386990680824398999},
    {0.7200246384089908028359, 0.2279399104638286445805, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.7200246384089908028359, 0.2279399104638286445805},
    {0.2279399104638286445805, 0.05203545112718055258354, 0.7200246384089908028359},
    {0.6648937733325680742511, 0.2104870015229888520136, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.6648937733325680742511, 0.2104870015229888520136},
    {0.2104870015229888520136, 0.1246192251444430737353, 0.6648937733325680742511},
    {0.5902899128082107628577, 0.1868694801479513816345, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.5902899128082107628577, 0.1868694801479513816345},
    {0.1868694801479513816345, 0.2228406070438378555078, 0.5902899128082107628577},
    {0.5012955263099527557906, 0.1586963157753820559758, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.5012955263099527557906, 0.1586963157753820559758},
    {0.1586963157753820559758, 0.3400081579146651882336, 0.5012955263099527557906},
    {0.4039750466131542887555, 0.1278873402972616691614, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.4039750466131542887555, 0.1278873402972616691614},
    {0.1278873402972616691614, 0.4681376130895840420831, 0.4039750466131542887555},
    {0.3049606140858721760125, 0.09654210614698864075977, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.3049606140858721760125, 0.09654210614698864075977},
    {0.09654210614698864075977, 0.5984972797671391832277, 0.3049606140858721760125},
    {0.2109999573142490401617, 0.06679675779478303427493, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.2109999573142490401617, 0.06679675779478303427493},
    {0.06679675779478303427493, 0.7222032848909679255633, 0.2109999573142490401617},
    {0.1284966200705750769196, 0.04067848030660634904979, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.1284966200705750769196, 0.04067848030660634904979},
    {0.04067848030660634904979, 0.8308248996228185740306, 0.1284966200705750769196},
    {0.06307409677552074516577, 0.01996751667188440154110, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.06307409677552074516577, 0.01996751667188440154110},
    {0.01996751667188440154110, 0.9169583865525948532931, 0.06307409677552074516577},
    {0.01919652945845774391922, 0.006077090939062605834111, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.01919652945845774391922, 0.006077090939062605834111},
    {0.006077090939062605834111, 0.9747263796024796502467, 0.01919652945845774391922},
    {0.6284122582789037571334, 0.3615694612594158370236, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.6284122582789037571334, 0.3615694612594158370236},
    {0.3615694612594158370236, 0.01001828046168040584302, 0.6284122582789037571334},
    {0.6017409525534700835430, 0.3462235963193493638735, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.6017409525534700835430, 0.3462235963193493638735},
    {0.3462235963193493638735, 0.05203545112718055258354, 0.6017409525534700835430},
    {0.5556668357850664446308, 0.3197139390704904816339, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.5556668357850664446308, 0.3197139390704904816339},
    {0.3197139390704904816339, 0.1246192251444430737353, 0.5556668357850664446308},
    {0.4933186942057873530961, 0.2838406987503747913961, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.4933186942057873530961, 0.2838406987503747913961},
    {0.2838406987503747913961, 0.2228406070438378555078, 0.4933186942057873530961},
    {0.4189440630519088243755, 0.2410477790334259873909, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.4189440630519088243755, 0.2410477790334259873909},
    {0.2410477790334259873909, 0.3400081579146651882336, 0.4189440630519088243755},
    {0.3376111266052983238613, 0.1942512603051176340556, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.3376111266052983238613, 0.1942512603051176340556},
    {0.1942512603051176340556, 0.4681376130895840420831, 0.3376111266052983238613},
    {0.2548625152839387764961, 0.1466402049489220402762, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.2548625152839387764961, 0.1466402049489220402762},
    {0.1466402049489220402762, 0.5984972797671391832277, 0.2548625152839387764961},
    {0.1763374592063575268704, 0.1014592559026745475663, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.1763374592063575268704, 0.1014592559026745475663},
    {0.1014592559026745475663, 0.7222032848909679255633, 0.1763374592063575268704},
    {0.1073875454207008269103, 0.06178755495648059905917, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.1073875454207008269103, 0.06178755495648059905917},
    {0.06178755495648059905917, 0.8308248996228185740306, 0.1073875454207008269103},
    {0.05271245600569670978720, 0.03032915744170843691966, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.05271245600569670978720, 0.03032915744170843691966},
    {0.03032915744170843691966, 0.9169583865525948532931, 0.05271245600569670978720},
    {0.01604297590090477216037, 0.009230644496615577592960, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.01604297590090477216037, 0.009230644496615577592960},
    {0.009230644496615577592960, 0.9747263796024796502467, 0.01604297590090477216037},
    {0.4949908597691597970785, 0.4949908597691597970785, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.4949908597691597970785, 0.4949908597691597970785},
    {0.4949908597691597970785, 0.01001828046168040584302, 0.4949908597691597970785},
    {0.4739822744364097237082, 0.4739822744364097237082, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.4739822744364097237082, 0.4739822744364097237082},
    {0.4739822744364097237082, 0.05203545112718055258354, 0.4739822744364097237082},
    {0.4376903874277784631324, 0.4376903874277784631324, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.4376903874277784631324, 0.4376903874277784631324},
    {0.4376903874277784631324, 0.1246192251444430737353, 0.4376903874277784631324},
    {0.3885796964780810722461, 0.3885796964780810722461, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.3885796964780810722461, 0.3885796964780810722461},
    {0.3885796964780810722461, 0.2228406070438378555078, 0.3885796964780810722461},
    {0.3299959210426674058832, 0.3299959210426674058832, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.3299959210426674058832, 0.3299959210426674058832},
    {0.3299959210426674058832, 0.3400081579146651882336, 0.3299959210426674058832},
    {0.2659311934552079789584, 0.2659311934552079789584, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.2659311934552079789584, 0.2659311934552079789584},
    {0.2659311934552079789584, 0.4681376130895840420831, 0.2659311934552079789584},
    {0.2007513601164304083861, 0.2007513601164304083861, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.2007513601164304083861, 0.2007513601164304083861},
    {0.2007513601164304083861, 0.5984972797671391832277, 0.2007513601164304083861},
    {0.1388983575545160372183, 0.1388983575545160372183, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.1388983575545160372183, 0.1388983575545160372183},
    {0.1388983575545160372183, 0.7222032848909679255633, 0.1388983575545160372183},
    {0.08458755018859071298472, 0.08458755018859071298472, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.08458755018859071298472, 0.08458755018859071298472},
    {0.08458755018859071298472, 0.8308248996228185740306, 0.08458755018859071298472},
    {0.04152080672370257335343, 0.04152080672370257335343, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.04152080672370257335343, 0.04152080672370257335343},
    {0.04152080672370257335343, 0.9169583865525948532931, 0.04152080672370257335343},
    {0.01263681019876017487667, 0.01263681019876017487667, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.01263681019876017487667, 0.01263681019876017487667},
    {0.01263681019876017487667, 0.9747263796024796502467, 0.01263681019876017487667},
    {0.3615694612594158370236, 0.6284122582789037571334, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.3615694612594158370236, 0.6284122582789037571334},
    {0.6284122582789037571334, 0.01001828046168040584302, 0.3615694612594158370236},
    {0.3462235963193493638735, 0.6017409525534700835430, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.3462235963193493638735, 0.6017409525534700835430},
    {0.6017409525534700835430, 0.05203545112718055258354, 0.3462235963193493638735},
    {0.3197139390704904816339, 0.5556668357850664446308, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.3197139390704904816339, 0.5556668357850664446308},
    {0.5556668357850664446308, 0.1246192251444430737353, 0.3197139390704904816339},
    {0.2838406987503747913961, 0.4933186942057873530961, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.2838406987503747913961, 0.4933186942057873530961},
    {0.4933186942057873530961, 0.2228406070438378555078, 0.2838406987503747913961},
    {0.2410477790334259873909, 0.4189440630519088243755, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.2410477790334259873909, 0.4189440630519088243755},
    {0.4189440630519088243755, 0.3400081579146651882336, 0.2410477790334259873909},
    {0.1942512603051176340556, 0.3376111266052983238613, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.1942512603051176340556, 0.3376111266052983238613},
    {0.3376111266052983238613, 0.4681376130895840420831, 0.1942512603051176340556},
    {0.1466402049489220402762, 0.2548625152839387764961, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.1466402049489220402762, 0.2548625152839387764961},
    {0.2548625152839387764961, 0.5984972797671391832277, 0.1466402049489220402762},
    {0.1014592559026745475663, 0.1763374592063575268704, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.1014592559026745475663, 0.1763374592063575268704},
    {0.1763374592063575268704, 0.7222032848909679255633, 0.1014592559026745475663},
    {0.06178755495648059905917, 0.1073875454207008269103, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.06178755495648059905917, 0.1073875454207008269103},
    {0.1073875454207008269103, 0.8308248996228185740306, 0.06178755495648059905917},
    {0.03032915744170843691966, 0.05271245600569670978720, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.03032915744170843691966, 0.05271245600569670978720},
    {0.05271245600569670978720, 0.9169583865525948532931, 0.03032915744170843691966},
    {0.009230644496615577592960, 0.01604297590090477216037, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.009230644496615577592960, 0.01604297590090477216037},
    {0.01604297590090477216037, 0.9747263796024796502467, 0.009230644496615577592960},
    {0.2380430204702371542571, 0.7519386990680824398999, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.2380430204702371542571, 0.7519386990680824398999},
    {0.7519386990680824398999, 0.01001828046168040584302, 0.2380430204702371542571},
    {0.2279399104638286445805, 0.7200246384089908028359, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.2279399104638286445805, 0.7200246384089908028359},
    {0.7200246384089908028359, 0.05203545112718055258354, 0.2279399104638286445805},
    {0.2104870015229888520136, 0.6648937733325680742511, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.2104870015229888520136, 0.6648937733325680742511},
    {0.6648937733325680742511, 0.1246192251444430737353, 0.2104870015229888520136},
    {0.1868694801479513816345, 0.5902899128082107628577, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.1868694801479513816345, 0.5902899128082107628577},
    {0.5902899128082107628577, 0.2228406070438378555078, 0.1868694801479513816345},
    {0.1586963157753820559758, 0.5012955263099527557906, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.1586963157753820559758, 0.5012955263099527557906},
    {0.5012955263099527557906, 0.3400081579146651882336, 0.1586963157753820559758},
    {0.1278873402972616691614, 0.4039750466131542887555, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.1278873402972616691614, 0.4039750466131542887555},
    {0.4039750466131542887555, 0.4681376130895840420831, 0.1278873402972616691614},
    {0.09654210614698864075977, 0.3049606140858721760125, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.09654210614698864075977, 0.3049606140858721760125},
    {0.3049606140858721760125, 0.5984972797671391832277, 0.09654210614698864075977},
    {0.06679675779478303427493, 0.2109999573142490401617, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.06679675779478303427493, 0.2109999573142490401617},
    {0.2109999573142490401617, 0.7222032848909679255633, 0.06679675779478303427493},
    {0.04067848030660634904979, 0.1284966200705750769196, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.04067848030660634904979, 0.1284966200705750769196},
    {0.1284966200705750769196, 0.8308248996228185740306, 0.04067848030660634904979},
    {0.01996751667188440154110, 0.06307409677552074516577, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.01996751667188440154110, 0.06307409677552074516577},
    {0.06307409677552074516577, 0.9169583865525948532931, 0.01996751667188440154110},
    {0.006077090939062605834111, 0.01919652945845774391922, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.006077090939062605834111, 0.01919652945845774391922},
    {0.01919652945845774391922, 0.9747263796024796502467, 0.006077090939062605834111},
    {0.1335722907678847655933, 0.8564094287704348285636, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.1335722907678847655933, 0.8564094287704348285636},
    {0.8564094287704348285636, 0.01001828046168040584302, 0.1335722907678847655933},
    {0.1279031661501157146687, 0.8200613827227037327478, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.1279031661501157146687, 0.8200613827227037327478},
    {0.8200613827227037327478, 0.05203545112718055258354, 0.1279031661501157146687},
    {0.1181098732269033545153, 0.7572709016286535717494, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.1181098732269033545153, 0.7572709016286535717494},
    {0.7572709016286535717494, 0.1246192251444430737353, 0.1181098732269033545153},
    {0.1048574517692548266734, 0.6723019411869073178188, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.1048574517692548266734, 0.6723019411869073178188},
    {0.6723019411869073178188, 0.2228406070438378555078, 0.1048574517692548266734},
    {0.08904873746210817350130, 0.5709431046232266382651, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.08904873746210817350130, 0.5709431046232266382651},
    {0.5709431046232266382651, 0.3400081579146651882336, 0.08904873746210817350130},
    {0.07176099920918737357162, 0.4601013877012285843453, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.07176099920918737357162, 0.4601013877012285843453},
    {0.4601013877012285843453, 0.4681376130895840420831, 0.07176099920918737357162},
    {0.05417235190570052967436, 0.3473303683271602870979, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.05417235190570052967436, 0.3473303683271602870979},
    {0.3473303683271602870979, 0.5984972797671391832277, 0.05417235190570052967436},
    {0.03748144321514474756686, 0.2403152718938873268698, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.03748144321514474756686, 0.2403152718938873268698},
    {0.2403152718938873268698, 0.7222032848909679255633, 0.03748144321514474756686},
    {0.02282578077179564976207, 0.1463493196053857762074, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.02282578077179564976207, 0.1463493196053857762074},
    {0.1463493196053857762074, 0.8308248996228185740306, 0.02282578077179564976207},
    {0.01120430642133866736021, 0.07183730702606647934666, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.01120430642133866736021, 0.07183730702606647934666},
    {0.07183730702606647934666, 0.9169583865525948532931, 0.01120430642133866736021},
    {0.003410017888076832323023, 0.02186360250944351743031, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.003410017888076832323023, 0.02186360250944351743031},
    {0.02186360250944351743031, 0.9747263796024796502467, 0.003410017888076832323023},
    {0.05590298084088421496187, 0.9340787386974353791951, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.05590298084088421496187, 0.9340787386974353791951},
    {0.9340787386974353791951, 0.01001828046168040584302, 0.05590298084088421496187},
    {0.05353032583085329712718, 0.8944342230419661502893, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.05353032583085329712718, 0.8944342230419661502893},
    {0.8944342230419661502893, 0.05203545112718055258354, 0.05353032583085329712718},
    {0.04943161446258844579628, 0.8259491603929684804684, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.04943161446258844579628, 0.8259491603929684804684},
    {0.8259491603929684804684, 0.1246192251444430737353, 0.04943161446258844579628},
    {0.04388518070313709158590, 0.7332742122530250529063, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.04388518070313709158590, 0.7332742122530250529063},
    {0.7332742122530250529063, 0.2228406070438378555078, 0.04388518070313709158590},
    {0.03726888140969175126101, 0.6227229606756430605054, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.03726888140969175126101, 0.6227229606756430605054},
    {0.6227229606756430605054, 0.3400081579146651882336, 0.03726888140969175126101},
    {0.03003357762939889948764, 0.5018288092810170584293, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.03003357762939889948764, 0.5018288092810170584293},
    {0.5018288092810170584293, 0.4681376130895840420831, 0.03003357762939889948764},
    {0.02267233670456853173212, 0.3788303835282922850402, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.02267233670456853173212, 0.3788303835282922850402},
    {0.3788303835282922850402, 0.5984972797671391832277, 0.02267233670456853173212},
    {0.01568681939868858156937, 0.2621098957103434928673, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.01568681939868858156937, 0.2621098957103434928673},
    {0.2621098957103434928673, 0.7222032848909679255633, 0.01568681939868858156937},
    {0.009553098010285195317090, 0.1596220023668962306523, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.009553098010285195317090, 0.1596220023668962306523},
    {0.1596220023668962306523, 0.8308248996228185740306, 0.009553098010285195317090},
    {0.004689251966906357273264, 0.07835236148049878943360, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.004689251966906357273264, 0.07835236148049878943360},
    {0.07835236148049878943360, 0.9169583865525948532931, 0.004689251966906357273264},
    {0.001427168491071993063903, 0.02384645190644835668943, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.001427168491071993063903, 0.02384645190644835668943},
    {0.02384645190644835668943, 0.9747263796024796502467, 0.001427168491071993063903},
    {0.01077661522261154255153, 0.9792051043157080516054, 0.01001828046168040584302},
    {0.01001828046168040584302, 0.01077661522261154255153, 0.9792051043157080516054},
    {0.9792051043157080516054, 0.01001828046168040584302, 0.01077661522261154255153},
    {0.01031923012946450770042, 0.9376453187433549397160, 0.05203545112718055258354},
    {0.05203545112718055258354, 0.01031923012946450770042, 0.9376453187433549397160},
    {0.9376453187433549397160, 0.05203545112718055258354, 0.01031923012946450770042},
    {0.009529107050874923454197, 0.8658516678046820028105, 0.1246192251444430737353},
    {0.1246192251444430737353, 0.009529107050874923454197, 0.8658516678046820028105},
    {0.8658516678046820028105, 0.1246192251444430737353, 0.009529107050874923454197},
    {0.008459901409525716595341, 0.7686994915466364278968, 0.2228406070438378555078},
    {0.2228406070438378555078, 0.008459901409525716595341, 0.7686994915466364278968},
    {0.7686994915466364278968, 0.2228406070438378555078, 0.008459901409525716595341},
    {0.007184454007426696820678, 0.6528073880779081149457, 0.3400081579146651882336},
    {0.3400081579146651882336, 0.007184454007426696820678, 0.6528073880779081149457},
    {0.6528073880779081149457, 0.3400081579146651882336, 0.007184454007426696820678},
    {0.005789678922340384182203, 0.5260727079880755737347, 0.4681376130895840420831},
    {0.4681376130895840420831, 0.005789678922340384182203, 0.5260727079880755737347},
    {0.5260727079880755737347, 0.4681376130895840420831, 0.005789678922340384182203},
    {0.004370626488738826280268, 0.3971320937441219904920, 0.5984972797671391832277},
    {0.5984972797671391832277, 0.004370626488738826280268, 0.3971320937441219904920},
    {0.3971320937441219904920, 0.5984972797671391832277, 0.004370626488738826280268},
    {0.003024003625270575880946, 0.2747727114837614985557, 0.7222032848909679255633},
    {0.7222032848909679255633, 0.003024003625270575880946, 0.2747727114837614985557},
    {0.2747727114837614985557, 0.7222032848909679255633, 0.003024003625270575880946},
    {0.001841584471743369701216, 0.1673335159054380562682, 0.8308248996228185740306},
    {0.8308248996228185740306, 0.001841584471743369701216, 0.1673335159054380562682},
    {0.1673335159054380562682, 0.8308248996228185740306, 0.001841584471743369701216},
    {0.0009039636772332240619001, 0.08213764977017192264497, 0.9169583865525948532931},
    {0.9169583865525948532931, 0.0009039636772332240619001, 0.08213764977017192264497},
    {0.08213764977017192264497, 0.9169583865525948532931, 0.0009039636772332240619001},
    {0.0002751203147806012469546, 0.02499850008273974850638, 0.9747263796024796502467},
    {0.9747263796024796502467, 0.0002751203147806012469546, 0.02499850008273974850638},
    {0.02499850008273974850638, 0.9747263796024796502467, 0.0002751203147806012469546},
};
static const double wts_d21[] = {
    0.0004707211692188813552369,
    0.0004707211692188813552369,
    0.0004707211692188813552369,
    0.001019441604488240793226,
    0.001019441604488240793226,
    0.001019441604488240793226,
    0.001403219906866597496663,
    0.001403219906866597496663,
    0.001403219906866597496663,
    0.001570956254945154578258,
    0.001570956254945154578258,
    0.001570956254945154578258,
    0.001519364113367702368026,
    0.001519364113367702368026,
    0.001519364113367702368026,
    0.001290246619652240526850,
    0.001290246619652240526850,
    0.001290246619652240526850,
    0.0009573390414001734716839,
    0.0009573390414001734716839,
    0.0009573390414001734716839,
    0.0006057027113382498703496,
    0.0006057027113382498703496,
    0.0006057027113382498703496,
    0.0003092133468395107072074,
    0.0003092133468395107072074,
    0.0003092133468395107072074,
    0.0001121521398777724029245,
    0.0001121521398777724029245,
    0.0001121521398777724029245,
    0.00001973761136775417670119,
    0.00001973761136775417670119,
    0.00001973761136775417670119,
    0.001061880005319636075031,
    0.001061880005319636075031,
    0.001061880005319636075031,
    0.002299715260720867805730,
    0.002299715260720867805730,
    0.002299715260720867805730,
    0.003165464524658462136028,
    0.003165464524658462136028,
    0.003165464524658462136028,
    0.003543853868153511430966,
    0.003543853868153511430966,
    0.003543853868153511430966,
    0.003427469334898662282345,
    0.003427469334898662282345,
    0.003427469334898662282345,
    0.002910612857317417027957,
    0.002910612857317417027957,
    0.002910612857317417027957,
    0.002159620711474760122068,
    0.002159620711474760122068,
    0.002159620711474760122068,
    0.001366379165409711673310,
    0.001366379165409711673310,
    0.001366379165409711673310,
    0.0006975413298953702098675,
    0.0006975413298953702098675,
    0.0006975413298953702098675,
    0.0002529992757445771555141,
    0.0002529992757445771555141,
    0.0002529992757445771555141,
    0.00004452524389112818696531,
    0.00004452524389112818696531,
    0.00004452524389112818696531,
    0.001575229082489853872559,
    0.001575229082489853872559,
    0.001575229082489853872559,
    0.003411476195036572721857,
    0.003411476195036572721857,
    0.003411476195036572721857,
    0.004695758234312922201233,
    0.004695758234312922201233,
    0.004695758234312922201233,
    0.005257073915361298205367,
    0.005257073915361298205367,
    0.005257073915361298205367,
    0.005084425122073339903425,
    0.005084425122073339903425,
    0.005084425122073339903425,
    0.004317702563139601905212,
    0.004317702563139601905212,
    0.004317702563139601905212,
    0.003203655153897043256677,
    0.003203655153897043256677,
    0.003203655153897043256677,
    0.002026933540775834946878,
    0.002026933540775834946878,
    0.002026933540775834946878,
    0.001034756642544645090689,
    0.001034756642544645090689,
    0.001034756642544645090689,
    0.0003753077701861105403768,
    0.0003753077701861105403768,
    0.0003753077701861105403768,
    0.00006605026813848592674261,
    0.00006605026813848592674261,
    0.00006605026813848592674261,
    0.001971835224251757841542,
    0.001971835224251757841542,
    0.001971835224251757841542,
    0.004270406763590718580944,
    0.004270406763590718580944,
    0.004270406763590718580944,
    0.005878041228360890643753,
    0.005878041228360890643753,
    0.005878041228360890643753,
    0.006580683176836458972392,
    0.006580683176836458972392,
    0.006580683176836458972392,
    0.006364565422400605734751,
    0.006364565422400605734751,
    0.006364565422400605734751,
    0.005404799909092336309389,
    0.005404799909092336309389,
    0.005404799909092336309389,
    0.004010261205198745872454,
    0.004010261205198745872454,
    0.004010261205198745872454,
    0.002537268386768037910349,
    0.002537268386768037910349,
    0.002537268386768037910349,
    0.001295284361480266411632,
    0.001295284361480266411632,
    0.001295284361480266411632,
    0.0004698015605569059443225,
    0.0004698015605569059443225,
    0.0004698015605569059443225,
    0.00008268019346168909822605,
    0.00008268019346168909822605,
    0.00008268019346168909822605,
    0.002222217471661084876856,
    0.002222217471661084876856,
    0.002222217471661084876856,
    0.004812660005478905045871,
    0.004812660005478905045871,
    0.004812660005478905045871,
    0.006624430761837330710567,
    0.006624430761837330710567,
    0.006624430761837330710567,
    0.007416293689844867927067,
    0.007416293689844867927067,
    0.007416293689844867927067,
    0.007172733455228532260267,
    0.007172733455228532260267,
    0.007172733455228532260267,
    0.006091097593296543828532,
    0.006091097593296543828532,
    0.006091097593296543828532,
    0.004519481347382339525116,
    0.004519481347382339525116,
    0.004519481347382339525116,
    0.002859448938746303750464,
    0.002859448938746303750464,
    0.002859448938746303750464,
    0.001459758657036402883327,
    0.001459758657036402883327,
    0.001459758657036402883327,
    0.0005294566316916066650000,
    0.0005294566316916066650000,
    0.0005294566316916066650000,
    0.00009317886617052622371495,
    0.00009317886617052622371495,
    0.00009317886617052622371495,
    0.002307794552878522747514,
    0.002307794552878522747514,
    0.002307794552878522747514,
    0.004997994429950388943909,
    0.004997994429950388943909,
    0.004997994429950388943909,
    0.006879536059385592504430,
    0.006879536059385592504430,
    0.006879536059385592504430,
    0.007701893445729165251393,
    0.007701893445729165251393,
    0.007701893445729165251393,
    0.007448953762771295162096,
    0.007448953762771295162096,
    0.007448953762771295162096,
    0.006325664353792420670153,
    0.006325664353792420670153,
    0.006325664353792420670153,
    0.004693525529492262299396,
    0.004693525529492262299396,
    0.004693525529492262299396,
    0.002969565656479287709268,
    0.002969565656479287709268,
    0.002969565656479287709268,
    0.001515973625528071005053,
    0.001515973625528071005053,
    0.001515973625528071005053,
    0.0005498458842059051122127,
    0.0005498458842059051122127,
    0.0005498458842059051122127,
    0.00009676716277052704698901,
    0.00009676716277052704698901,
    0.00009676716277052704698901,
    0.002222217471661084876856,
    0.002222217471661084876856,
    0.002222217471661084876856,
    0.004812660005478905045871,
    0.004812660005478905045871,
    0.004812660005478905045871,
    0.006624430761837330710567,
    0.006624430761837330710567,
    0.006624430761837330710567,
    0.007416293689844867927067,
    0.007416293689844867927067,
    0.007416293689844867927067,
    0.007172733455228532260267,
    0.007172733455228532260267,
    0.007172733455228532260267,
    0.006091097593296543828532,
    0.006091097593296543828532,
    0.006091097593296543828532,
    0.004519481347382339525116,
    0.004519481347382339525116,
    0.004519481347382339525116,
    0.002859448938746303750464,
    0.002859448938746303750464,
    0.002859448938746303750464,
    0.001459758657036402883327,
    0.001459758657036402883327,
    0.001459758657036402883327,
    0.0005294566316916066650000,
    0.0005294566316916066650000,
    0.0005294566316916066650000,
    0.00009317886617052622371495,
    0.00009317886617052622371495,
    0.00009317886617052622371495,
    0.001971835224251757841542,
    0.001971835224251757841542,
    0.001971835224251757841542,
    0.004270406763590718580944,
    0.004270406763590718580944,
    0.004270406763590718580944,
    0.005878041228360890643753,
    0.005878041228360890643753,
    0.005878041228360890643753,
    0.006580683176836458972392,
    0.006580683176836458972392,
    0.006580683176836458972392,
    0.006364565422400605734751,
    0.006364565422400605734751,
    0.006364565422400605734751,
    0.005404799909092336309389,
    0.005404799909092336309389,
    0.005404799909092336309389,
    0.004010261205198745872454,
    0.004010261205198745872454,
    0.004010261205198745872454,
    0.002537268386768037910349,
    0.002537268386768037910349,
    0.002537268386768037910349,
    0.001295284361480266411632,
    0.001295284361480266411632,
    0.001295284361480266411632,
    0.0004698015605569059443225,
    0.0004698015605569059443225,
    0.0004698015605569059443225,
    0.00008268019346168909822605,
    0.00008268019346168909822605,
    0.00008268019346168909822605,
    0.001575229082489853872559,
    0.001575229082489853872559,
    0.001575229082489853872559,
    0.003411476195036572721857,
    0.003411476195036572721857,
    0.003411476195036572721857,
    0.004695758234312922201233,
    0.004695758234312922201233,
    0.004695758234312922201233,
    0.005257073915361298205367,
    0.005257073915361298205367,
    0.005257073915361298205367,
    0.005084425122073339903425,
    0.005084425122073339903425,
    0.005084425122073339903425,
    0.004317702563139601905212,
    0.004317702563139601905212,
    0.004317702563139601905212,
    0.003203655153897043256677,
    0.003203655153897043256677,
    0.003203655153897043256677,
    0.002026933540775834946878,
    0.002026933540775834946878,
    0.002026933540775834946878,
    0.001034756642544645090689,
    0.001034756642544645090689,
    0.001034756642544645090689,
    0.0003753077701861105403768,
    0.0003753077701861105403768,
    0.0003753077701861105403768,
    0.00006605026813848592674261,
    0.00006605026813848592674261,
    0.00006605026813848592674261,
    0.001061880005319636075031,
    0.001061880005319636075031,
    0.001061880005319636075031,
    0.002299715260720867805730,
    0.002299715260720867805730,
    0.002299715260720867805730,
    0.003165464524658462136028,
    0.003165464524658462136028,
    0.003165464524658462136028,
    0.003543853868153511430966,
    0.003543853868153511430966,
    0.003543853868153511430966,
    0.003427469334898662282345,
    0.003427469334898662282345,
    0.003427469334898662282345,
    0.002910612857317417027957,
    0.002910612857317417027957,
    0.002910612857317417027957,
    0.002159620711474760122068,
    0.002159620711474760122068,
    0.002159620711474760122068,
    0.001366379165409711673310,
    0.001366379165409711673310,
    0.001366379165409711673310,
    0.0006975413298953702098675,
    0.0006975413298953702098675,
    0.0006975413298953702098675,
    0.0002529992757445771555141,
    0.0002529992757445771555141,
    0.0002529992757445771555141,
    0.00004452524389112818696531,
    0.00004452524389112818696531,
    0.00004452524389112818696531,
    0.0004707211692188813552369,
    0.0004707211692188813552369,
    0.0004707211692188813552369,
    0.001019441604488240793226,
    0.001019441604488240793226,
    0.001019441604488240793226,
    0.001403219906866597496663,
    0.001403219906866597496663,
    0.001403219906866597496663,
    0.001570956254945154578258,
    0.001570956254945154578258,
    0.001570956254945154578258,
    0.001519364113367702368026,
    0.001519364113367702368026,
    0.001519364113367702368026,
    0.001290246619652240526850,
    0.001290246619652240526850,
    0.001290246619652240526850,
    0.0009573390414001734716839,
    0.0009573390414001734716839,
    0.0009573390414001734716839,
    0.0006057027113382498703496,
    0.0006057027113382498703496,
    0.0006057027113382498703496,
    0.0003092133468395107072074,
    0.0003092133468395107072074,
    0.0003092133468395107072074,
    0.0001121521398777724029245,
    0.0001121521398777724029245,
    0.0001121521398777724029245,
    0.00001973761136775417670119,
    0.00001973761136775417670119,
    0.00001973761136775417670119,
};

const RawQuadratureRule kTriangleRules[] = {
    {1, 1, pts_d1, wts_d1},
    {2, 3, pts_d2, wts_d2},
    {3, 4, pts_d3, wts_d3},
    {4, 6, pts_d4, wts_d4},
    {5, 7, pts_d5, wts_d5},
    {7, 48, pts_d7, wts_d7},
    {9, 75, pts_d9, wts_d9},
    {11, 108, pts_d11, wts_d11},
    {13, 147, pts_d13, wts_d13},
    {15, 192, pts_d15, wts_d15},
    {17, 243, pts_d17, wts_d17},
    {19, 300, pts_d19, wts_d19},
    {21, 363, pts_d21, wts_d21},
};
const int kTriangleRuleCount = 13;

}  // namespace stokesmini::detail
