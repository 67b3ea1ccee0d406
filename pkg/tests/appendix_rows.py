# word, h, |Conf|, intersection polynomial as printed
ROWS = {
    4: [
        ('0022', 1, 2, 'x+1'),
    ],
    6: [
        ('020242', 2, 3, 'x^2+2'),
        ('000222', 1, 6, '(x+1)(x^2+x+1)'),
        ('002022', 1, 4, '(x+1)^2'),
    ],
    8: [
        ('02020242', 3, 7, 'x^3+3x^2+3'),
        ('00202242', 2, 14, '(x+1)(x^4+2x^2+3x+1)'),
        ('00202422', 2, 10, '(x+1)(x^3+x^2+x+2)'),
        ('02002422', 2, 8, '(x+1)^2(x^2-x+2)'),
        ('02020422', 2, 6, '(x+1)(x^2+2)'),
        ('20204242', 2, 5, 'x^3+2x+2'),
        ('02402462', 2, 5, 'x^3+2x+2'),
        ('00002222', 1, 24, '(x+1)^2(x^2+1)(x^2+x+1)'),
        ('00020222', 1, 18, '(x+1)(x^2+x+1)^2'),
        ('00022022', 1, 12, '(x+1)^2(x^2+x+1)'),
        ('00220422', 1, 8, '(x+1)^3'),
        ('00202022', 1, 8, '(x+1)^3'),
    ],
    10: [
        ('0202024242', 6, 31, 'x^7+4x^5+3x^4+6x^3+11x^2+6'),
        ('0202420242', 5, 17, 'x^5+2x^4+2x^3+7x^2+5'),
        ('0202020242', 4, 15, 'x^4+4x^3+6x^2+4'),
        ('2420246424', 4, 11, 'x^5+2x^3+2x^2+2x+4'),
        ('2420426424', 4, 9, '(x^2+2)^2'),
        ('0020202242', 3, 46, '(x+1)(x^6+3x^5+3x^4+3x^3+7x^2+5x+1)'),
        ('0020202422', 3, 38, '(x+1)(x^6+x^5+2x^4+5x^3+4x^2+3x+3)'),
        ('0020220242', 3, 32, '(x+1)^3(x^3+x^2+2)'),
        ('0200202422', 3, 28, '(x+1)^2(x^4+x^3+2x^2+3)'),
        ('0202042242', 3, 24, '(x+1)^2(x^2+1)(x^2-x+3)'),
        ('0202024422', 3, 24, '(x+1)^2(x^4+2x^2+3)'),
        ('0200220242', 3, 22, '(x+1)(x^4+3x^3+3x^2+x+3)'),
        ('0022020242', 3, 22, '(x+1)(x^4+3x^3+3x^2+x+3)'),
        ('0202002422', 3, 20, '(x+1)^2(x^3+2x^2-x+3)'),
        ('0202042422', 3, 18, '(x+1)(x^4+2x^3+x^2+2x+3)'),
        ('2002420242', 3, 14, '(x+1)(x^4+2x^2+x+3)'),
        ('0202420422', 3, 14, '(x+1)(x^3+3x^2+3)'),
        ('0202024462', 3, 14, '(x+1)(x^3+3x^2+3)'),
        ('0202020422', 3, 14, '(x+1)(x^3+3x^2+3)'),
        ('0024202462', 3, 14, '(x+1)(x^4+2x^2+x+3)'),
        ('2020204242', 3, 13, 'x^4+4x^3+x^2+4x+3'),
        ('0202042462', 3, 13, 'x^4+4x^3+x^2+4x+3'),
        ('2020420242', 3, 11, 'x^4+2x^3+2x^2+3x+3'),
        ('0204202462', 3, 11, 'x^4+2x^3+2x^2+3x+3'),
        ('2042042642', 3, 8, 'x^4+2x^2+2x+3'),
        ('0424026462', 3, 8, 'x^4+2x^2+2x+3'),
        ('0246024682', 3, 8, 'x^4+2x^2+2x+3'),
        ('0002022242', 2, 78, '(x+1)(x^2+x+1)(x^6+2x^4+3x^3+4x^2+2x+1)'),
        ('0002022422', 2, 60, '(x+1)^2(x^2+x+1)(x^4+x^2+2x+1)'),
        ('0020022422', 2, 48, '(x+1)^2(x^6+x^4+3x^3+3x^2+2x+2)'),
        ('0002202422', 2, 48, '(x+1)^2(x^2+x+1)(x^3+x^2+2)'),
        ('0002024222', 2, 42, '(x+1)(x^2+x+1)(x^4+x^3+2x^2+x+2)'),
        ('0020024222', 2, 36, '(x+1)^2(x^2+x+1)(x^3+2)'),
        ('0022002242', 2, 32, '(x+1)^3(x^3+x^2+2)'),
        ('0200024222', 2, 30, '(x+1)(x^2+x+1)(x^4+x^2+x+2)'),
        ('0020204222', 2, 30, '(x+1)(x^2+x+1)(x^3+x^2+x+2)'),
        ('0022002422', 2, 28, '(x+1)^2(x^4+x^3+x^2+2x+2)'),
        ('0020220422', 2, 28, '(x+1)^2(x^4+2x^2+3x+1)'),
        ('0200204222', 2, 24, '(x+1)^2(x^2-x+2)(x^2+x+1)'),
        ('2002042242', 2, 20, '(x+1)^2(x^4-x^3+2x^2+x+2)'),
        ('0220024422', 2, 20, '(x+1)^2(x^4+2x+2)'),
        ('0202204422', 2, 20, '(x+1)^2(x^3+x^2+x+2)'),
        ('0200220422', 2, 20, '(x+1)^2(x^3+x^2+x+2)'),
        ('0024022462', 2, 20, '(x+1)^2(x^4-x^3+2x^2+x+2)'),
        ('0022024462', 2, 20, '(x+1)^2(x^3+x^2+x+2)'),
        ('0022020422', 2, 20, '(x+1)^2(x^3+x^2+x+2)'),
        ('0020242022', 2, 20, '(x+1)^2(x^3+x^2+x+2)'),
        ('2002204242', 2, 18, '(x+1)(x^4+x^3+2x^2+3x+2)'),
        ('0202004222', 2, 18, '(x+1)(x^2+2)(x^2+x+1)'),
        ('0022042462', 2, 18, '(x+1)(x^4+x^3+2x^2+3x+2)'),
        ('2020402242', 2, 16, '(x+1)^3(x^2-x+2)'),
        ('2002042422', 2, 16, '(x+1)^3(x^2-x+2)'),
        ('0220042422', 2, 16, '(x+1)^3(x^2-x+2)'),
        ('0200242022', 2, 16, '(x+1)^3(x^2-x+2)'),
        ('0024024262', 2, 16, '(x+1)^3(x^2-x+2)'),
        ('2020042422', 2, 14, '(x+1)(x^4+2x^2+2x+2)'),
        ('0244024662', 2, 14, '(x+1)(x^4+2x^2+2x+2)'),
        ('0204024262', 2, 14, '(x+1)(x^4+2x^2+2x+2)'),
        ('2020204422', 2, 12, '(x+1)^2(x^2+2)'),
        ('2002420422', 2, 12, '(x+1)^2(x^2+2)'),
        ('0220420422', 2, 12, '(x+1)^2(x^2+2)'),
        ('0202044262', 2, 12, '(x+1)^2(x^2+2)'),
        ('0202042022', 2, 12, '(x+1)^2(x^2+2)'),
        ('0024204262', 2, 12, '(x+1)^2(x^2+2)'),
        ('2042402426', 2, 10, '(x+1)(x^3+2x+2)'),
        ('2020420422', 2, 10, '(x+1)(x^3+2x+2)'),
        ('0244026462', 2, 10, '(x+1)(x^3+2x+2)'),
        ('0204204262', 2, 10, '(x+1)(x^3+2x+2)'),
        ('0000022222', 1, 120, '(x+1)^2(x^2+1)(x^2+x+1)(x^4+x^3+x^2+x+1)'),
        ('0000202222', 1, 96, '(x+1)^3(x^2+1)^2(x^2+x+1)'),
        ('0000220222', 1, 72, '(x+1)^2(x^2+1)(x^2+x+1)^2'),
        ('0002020222', 1, 54, '(x+1)(x^2+x+1)^3'),
        ('0000222022', 1, 48, '(x+1)^3(x^2+1)(x^2+x+1)'),
        ('0002204222', 1, 36, '(x+1)^2(x^2+x+1)^2'),
        ('0002200222', 1, 36, '(x+1)^2(x^2+x+1)^2'),
        ('0002022022', 1, 36, '(x+1)^2(x^2+x+1)^2'),
        ('0022004222', 1, 24, '(x+1)^3(x^2+x+1)'),
        ('0020022022', 1, 24, '(x+1)^3(x^2+x+1)'),
        ('0002242022', 1, 24, '(x+1)^3(x^2+x+1)'),
        ('0002202022', 1, 24, '(x+1)^3(x^2+x+1)'),
        ('2002204422', 1, 16, '(x+1)^4'),
        ('0022044262', 1, 16, '(x+1)^4'),
        ('0022042022', 1, 16, '(x+1)^4'),
        ('0020202022', 1, 16, '(x+1)^4'),
    ],
}
