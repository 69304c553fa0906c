//! Chi-square CDF reference values computed with 40-digit arithmetic and
//! rounded to 17 significant digits.

#![allow(dead_code, clippy::excessive_precision)]

// (df, x, P(df/2, x/2))
pub const GRID: &[(f64, f64, f64)] = &[
    (1.0, 0.1, 0.24817036595415072),
    (1.0, 0.5, 0.52049987781304654),
    (1.0, 1.0, 0.6826894921370859),
    (1.0, 2.0, 0.84270079294971487),
    (1.0, 3.5, 0.93863117086059783),
    (1.0, 5.0, 0.97465268132253174),
    (1.0, 7.5, 0.99383010067945584),
    (1.0, 10.0, 0.99843459774199745),
    (1.0, 15.0, 0.9998924888232705),
    (1.0, 20.0, 0.99999225578356896),
    (1.0, 30.0, 0.99999995679536942),
    (1.0, 50.0, 0.99999999999846254),
    (2.0, 0.1, 0.048770575499285994),
    (2.0, 0.5, 0.22119921692859513),
    (2.0, 1.0, 0.39346934028736658),
    (2.0, 2.0, 0.63212055882855768),
    (2.0, 3.5, 0.82622605654955487),
    (2.0, 5.0, 0.9179150013761012),
    (2.0, 7.5, 0.97648225414399089),
    (2.0, 10.0, 0.99326205300091453),
    (2.0, 15.0, 0.99944691562985217),
    (2.0, 20.0, 0.99995460007023752),
    (2.0, 30.0, 0.9999996940976795),
    (2.0, 50.0, 0.99999999998611206),
    (3.0, 0.1, 0.0081625762681235222),
    (3.0, 0.5, 0.081108588345324141),
    (3.0, 1.0, 0.1987480430987992),
    (3.0, 2.0, 0.42759329552912017),
    (3.0, 3.5, 0.67923787919436097),
    (3.0, 5.0, 0.82820285570326686),
    (3.0, 7.5, 0.94244154802736359),
    (3.0, 10.0, 0.98143386453695677),
    (3.0, 15.0, 0.99818335103342768),
    (3.0, 20.0, 0.99983025756444717),
    (3.0, 30.0, 0.99999861994296871),
    (3.0, 50.0, 0.99999999992010821),
    (4.0, 0.1, 0.0012091042742502906),
    (4.0, 0.5, 0.026499021160743915),
    (4.0, 1.0, 0.090204010431049865),
    (4.0, 2.0, 0.26424111765711536),
    (4.0, 3.5, 0.5221216555112759),
    (4.0, 5.0, 0.71270250481635422),
    (4.0, 7.5, 0.88829070718395674),
    (4.0, 10.0, 0.9595723180054872),
    (4.0, 15.0, 0.99529878285374341),
    (4.0, 20.0, 0.99950060077261267),
    (4.0, 30.0, 0.99999510556287197),
    (4.0, 50.0, 0.99999999963891346),
    (5.0, 0.1, 0.00016231661192261504),
    (5.0, 0.5, 0.0078767067673704078),
    (5.0, 1.0, 0.037434226752703631),
    (5.0, 2.0, 0.15085496391539036),
    (5.0, 3.5, 0.37661237225041797),
    (5.0, 5.0, 0.58411981300449208),
    (5.0, 7.5, 0.81397016639713298),
    (5.0, 10.0, 0.92476475385348782),
    (5.0, 15.0, 0.98963766208421356),
    (5.0, 20.0, 0.99875026943696862),
    (5.0, 30.0, 0.99998525141896156),
    (5.0, 50.0, 0.99999999861420266),
    (6.0, 0.1, 2.0067493624397946e-5),
    (6.0, 0.5, 0.0021614966897625126),
    (6.0, 1.0, 0.014387677966970687),
    (6.0, 2.0, 0.080301397071394196),
    (6.0, 3.5, 0.2560303046027818),
    (6.0, 5.0, 0.45618688411667048),
    (6.0, 7.5, 0.72293155663389269),
    (6.0, 10.0, 0.87534798051691886),
    (6.0, 15.0, 0.9797432849433356),
    (6.0, 20.0, 0.99723060428448842),
    (6.0, 30.0, 0.99996069155181552),
    (6.0, 50.0, 0.999999995298931),
    (7.0, 0.1, 2.3114187985968838e-6),
    (7.0, 0.5, 0.00055351860957503451),
    (7.0, 1.0, 0.0051714634834845177),
    (7.0, 2.0, 0.040159631269898443),
    (7.0, 3.5, 0.16477451738965786),
    (7.0, 5.0, 0.34003677030571729),
    (7.0, 7.5, 0.62126309395178706),
    (7.0, 10.0, 0.81142653248654993),
    (7.0, 15.0, 0.96400059523657122),
    (7.0, 20.0, 0.99443031692705443),
    (7.0, 30.0, 0.99990504027491866),
    (7.0, 50.0, 0.99999998555514722),
    (8.0, 0.1, 2.5021394729973417e-7),
    (8.0, 0.5, 0.00013336965051406238),
    (8.0, 1.0, 0.0017516225562908237),
    (8.0, 2.0, 0.018988156876153809),
    (8.0, 3.5, 0.10081034990616024),
    (8.0, 5.0, 0.24242386686693404),
    (8.0, 7.5, 0.51623261844631264),
    (8.0, 10.0, 0.73497408470263829),
    (8.0, 15.0, 0.94085454016731605),
    (8.0, 20.0, 0.98966394932407428),
    (8.0, 30.0, 0.99978862149653324),
    (8.0, 50.0, 0.99999995913241052),
    (9.0, 0.1, 2.5630325396624375e-8),
    (9.0, 0.5, 3.0433741161079276e-5),
    (9.0, 1.0, 0.00056249730216750155),
    (9.0, 2.0, 0.0085323933711864655),
    (9.0, 3.5, 0.058855589959277813),
    (9.0, 5.0, 0.16569173980659245),
    (9.0, 7.5, 0.41479123061748787),
    (9.0, 10.0, 0.64951478767663866),
    (9.0, 15.0, 0.90906402342019478),
    (9.0, 20.0, 0.98208759547015673),
    (9.0, 30.0, 0.99956127822902052),
    (9.0, 50.0, 0.99999989227617977),
];
