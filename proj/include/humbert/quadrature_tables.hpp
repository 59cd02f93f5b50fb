// Generated by tools/make_quadrature_tables.py -- do not edit by hand.
// Gauss-Legendre nodes/weights on [-1, 1], 25 significant digits.
#pragma once

namespace humbert::tables {

inline constexpr long double gl16_nodes[16] = {
    -0.9894009349916499325961542L,
    -0.9445750230732325760779884L,
    -0.8656312023878317438804679L,
    -0.7554044083550030338951012L,
    -0.6178762444026437484466718L,
    -0.4580167776572273863424194L,
    -0.2816035507792589132304605L,
    -0.09501250983763744018531934L,
    0.09501250983763744018531934L,
    0.2816035507792589132304605L,
    0.4580167776572273863424194L,
    0.6178762444026437484466718L,
    0.7554044083550030338951012L,
    0.8656312023878317438804679L,
    0.9445750230732325760779884L,
    0.9894009349916499325961542L,
};

inline constexpr long double gl16_weights[16] = {
    0.02715245941175409485178057L,
    0.06225352393864789286284384L,
    0.09515851168249278480992511L,
    0.1246289712555338720524763L,
    0.1495959888165767320815017L,
    0.1691565193950025381893121L,
    0.1826034150449235888667637L,
    0.1894506104550684962853967L,
    0.1894506104550684962853967L,
    0.1826034150449235888667637L,
    0.1691565193950025381893121L,
    0.1495959888165767320815017L,
    0.1246289712555338720524763L,
    0.09515851168249278480992511L,
    0.06225352393864789286284384L,
    0.02715245941175409485178057L,
};

inline constexpr long double gl32_nodes[32] = {
    -0.9972638618494815635449811L,
    -0.9856115115452683354001750L,
    -0.9647622555875064307738119L,
    -0.9349060759377396891709191L,
    -0.8963211557660521239653072L,
    -0.8493676137325699701336930L,
    -0.7944837959679424069630973L,
    -0.7321821187402896803874267L,
    -0.6630442669302152009751152L,
    -0.5877157572407623290407455L,
    -0.5068999089322293900237475L,
    -0.4213512761306353453641194L,
    -0.3318686022821276497799168L,
    -0.2392873622521370745446032L,
    -0.1444719615827964934851864L,
    -0.04830766568773831623481257L,
    0.04830766568773831623481257L,
    0.1444719615827964934851864L,
    0.2392873622521370745446032L,
    0.3318686022821276497799168L,
    0.4213512761306353453641194L,
    0.5068999089322293900237475L,
    0.5877157572407623290407455L,
    0.6630442669302152009751152L,
    0.7321821187402896803874267L,
    0.7944837959679424069630973L,
    0.8493676137325699701336930L,
    0.8963211557660521239653072L,
    0.9349060759377396891709191L,
    0.9647622555875064307738119L,
    0.9856115115452683354001750L,
    0.9972638618494815635449811L,
};

inline constexpr long double gl32_weights[32] = {
    0.007018610009470096600407064L,
    0.01627439473090567060517056L,
    0.02539206530926205945575259L,
    0.03427386291302143310268773L,
    0.04283589802222668065687865L,
    0.05099805926237617619616324L,
    0.05868409347853554714528364L,
    0.06582222277636184683765006L,
    0.07234579410884850622539936L,
    0.07819389578707030647174092L,
    0.08331192422694675522219907L,
    0.08765209300440381114277146L,
    0.09117387869576388471286858L,
    0.09384439908080456563918024L,
    0.09563872007927485941908200L,
    0.09654008851472780056676483L,
    0.09654008851472780056676483L,
    0.09563872007927485941908200L,
    0.09384439908080456563918024L,
    0.09117387869576388471286858L,
    0.08765209300440381114277146L,
    0.08331192422694675522219907L,
    0.07819389578707030647174092L,
    0.07234579410884850622539936L,
    0.06582222277636184683765006L,
    0.05868409347853554714528364L,
    0.05099805926237617619616324L,
    0.04283589802222668065687865L,
    0.03427386291302143310268773L,
    0.02539206530926205945575259L,
    0.01627439473090567060517056L,
    0.007018610009470096600407064L,
};

} // namespace humbert::tables
