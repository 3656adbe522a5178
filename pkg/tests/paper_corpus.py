"""
Every isomorphism signature printed in the source material, with the
independently stated tetrahedron count (the final complexity entry of the
same row, or the count given in prose) and whether the triangulation is
closed or a one-cusped ideal knot complement.

Two rows of the source tables carry typos and are adjusted here:
the L(11,2) seed row states size 2 for a 4-tetrahedron signature (its
sibling rows and the decoded homology confirm size 4), and the 7_4 table
repeats the 7_3 seed string where the caption names gLLAQbdedfffdwmfarv.
"""

CLOSED = "closed"
IDEAL = "ideal"

# (signature, stated size, kind)
CORPUS = [
    # Seifert fibre space with a brick-based minimal triangulation.
    ("iLLLPQcbcgffghhhtsmhgosof", 8, CLOSED),
    # Core-edge search: the 3-sphere.
    ("uLLvQQvLAPvPAQccdfeghhgmklnorsqssttthsaaggggaaaaaaanaaagb", 20, CLOSED),
    ("cMcabbgqs", 2, CLOSED),
    ("tLvLvAPMLwPQQkcfhfikjlopqpqssrqsrrupjjvvvhaavkbhevkmff", 19, CLOSED),
    ("wLvvvQvvAAMMQQQkalkjnmrlprpqvqvvtstsuuunaaaqqaxggggagaakkcwiti",
     22, CLOSED),
    ("sLvAAvLAzMMQQcdceflkmjmqonprqprrhvrqnkkkksqeekocksf", 18, CLOSED),
    # Tunnel-edge search: trefoil.
    ("cPcbbbadu", 2, IDEAL),
    ("lLLLzzQQcbcgeijgjikkktsltaurattgg", 11, IDEAL),
    # Figure-eight knot.
    ("cPcbbbiht", 2, IDEAL),
    ("fLLQcacdedejbqqww", 5, IDEAL),
    ("mLvzALAQQccefhijliklklhnipouapufbvv", 12, IDEAL),
    # (5,2) torus knot.
    ("dLQbcccaekv", 3, IDEAL),
    ("kLvvAQQkbfihjgjgiijmaacsgkgnww", 10, IDEAL),
    ("mLvvAQLQQbfigjhlkljklkpaagrwmmmrauu", 12, IDEAL),
    # Seifert-fibre search examples.
    ("lLLLLPMQccddfjiihikkkpkrwaaacttvc", 11, CLOSED),
    ("fLLQcaceeedjkuxkj", 5, CLOSED),
    ("gLLAQbdedfffendolgn", 6, CLOSED),
    ("ivLLQQccehgfgfhhjsquaaagj", 8, CLOSED),
    ("mLLwPvMQQacdhghklkjlklnkamamvirvlji", 12, CLOSED),
    ("nLvPwLzQQkccgfiikjmklmlmhnahlupmtrsvgb", 13, CLOSED),
    ("uLLPvvLQLAPAPQccdfeknlipnomqnrtstssthsipaaliaravlkuaaxxxx",
     20, CLOSED),
    ("gLLMQacdefefjkaknkr", 6, CLOSED),
    ("mLvPLLQPQccgikjikjlkllhnawaawaauhxn", 12, CLOSED),
    ("pvLLvLLQQQQcdhmnhllnolokomnvvgwtvbvxdbdgmwt", 15, CLOSED),
    ("svLLAvLzzQQQQcfheklmrlmmpqrqpqprfeqsraihppipnrrsrsr", 18, CLOSED),
    ("zvLLvvzzLMwQQzQQQkefmhjosuuwnqptwyvyvwvxtxyxspsgjpuamabaalnhwhwnngvgps",
     25, CLOSED),
    ("fvPQcdecedekrsnrs", 5, CLOSED),
    # Treewidth discussion.
    ("hLALAkcbbeffggqqnnmxkk", 7, CLOSED),
    ("jLAMLLQbcbdeghhiixxnxxjqisj", 9, CLOSED),
    # Appendix: more lens spaces without core edges.
    ("dLQbcbchhjs", 3, CLOSED),
    ("oLLvPMwwQQccdhgiijklmnmnmnhshgsvamxwgggoo", 14, CLOSED),
    ("mLvwLLQQQadjljgilkilkknaqlabamaqacv", 12, CLOSED),
    ("dLQbcbchhjw", 3, CLOSED),
    ("nvLLALzQQkdgfgikjklljmmmolemacjketridn", 13, CLOSED),
    ("ovLLwLPQPQcegfkimljinlmnmnrxuabmrwrpnqpqq", 14, CLOSED),
    ("nvLLMMAwQkcdghghjikmllmmnkpmigoriulkkn", 13, CLOSED),
    ("eLAkbcbddhhjhr", 4, CLOSED),
    ("qvLLvLALQQQkdgihimkmkolnonpppoliggfsfjpodilmfg", 16, CLOSED),
    ("tLvAvMvwMwQQQkadfhikmlprsopqpsqrqsnaqaamvktmqpauamigwv", 19, CLOSED),
    ("qLvwLPLvQQQkadhgkiknopknopponjajcxacsvvocvvvvc", 16, CLOSED),
    ("eLAkbcbddhhjqn", 4, CLOSED),
    ("svLALvMvLQQQQcefflhormrmpqnnpqrqnnaiaktaualakkvgoro", 18, CLOSED),
    ("tvLALvwLMMAQQkceffljopqqrlprosopssnnaiafaaddhtkrkakkut", 19, CLOSED),
    ("rvLLALwwLQQQccdgfkhkoqpqpononpqnkpisnsaaaanngngns", 17, CLOSED),
    ("fLAMcbcbdeehhjhxj", 5, CLOSED),
    ("uLvvwAwwzMQQAQccghkilpnqosnrrsqotsttpagcvaaahapggvcfbmgxm",
     20, CLOSED),
    ("vLvvwLAzzPAMQQQcghimnqorlonosprutstuutabnaaadamdgffgfdjfjpm",
     21, CLOSED),
    ("uLvwvAvLzQPQQQcadigooqmoslrprtsprtstnaaoqovfctkfkfqlkfxta",
     20, CLOSED),
    # Appendix: more knots without tunnel edges.
    ("gLLMQccefeffdfeqldg", 6, IDEAL),
    ("hLLAPkcdedfggghslfcffg", 7, IDEAL),
    ("jLLLLQQbcghiighihxsmoorgogf", 9, IDEAL),
    ("nvLALMvQQkcdfihjhkkllmmmnwaipckllhmljc", 13, IDEAL),
    ("nLvAzLAMQkbfeghijkmkmllmmppavkhhaxjorb", 13, IDEAL),
    ("fLLQcbeddeeedgfid", 5, IDEAL),
    ("gLLMQbcdefffdoweuoc", 6, IDEAL),
    ("gLLMQbcdefffpnbhunw", 6, IDEAL),
    ("kvLLAQPkegfhfihijjjfmpxeupoxld", 10, IDEAL),
    ("lLLvAMPQccefhigijjkkkuiaaofvaqems", 11, IDEAL),
    ("eLPkbcddddcwjb", 4, IDEAL),
    ("ivLAAQccefeghhghbkafhtsoc", 8, IDEAL),
    ("lvLALMMQcdcfigijhkjkkckadasjjqsee", 11, IDEAL),
    ("mvLLAzMQQcffgfjkjlljklweaxevcopqcbe", 12, IDEAL),
    ("eLAkbccddaekln", 4, IDEAL),
    ("jLLzPAQcdegfhgiiitgaavoneel", 9, IDEAL),
    ("mLvvLMQQQbigijlhkjkjlldugswanfbffhi", 12, IDEAL),
    ("eLAkbccddmejln", 4, IDEAL),
    ("hLLPMkcdefegggdkamebjk", 7, IDEAL),
    ("mLvvLAQQQcghjijkhkllklpqgvsvvfvqqrd", 12, IDEAL),
    ("nLvLvPQPQkcfihjkillkjmmmpuvgkfvaaksimk", 13, IDEAL),
    ("fLLQcbeddeeddgfua", 5, IDEAL),
    ("hLvMQkbefefgggpptxtmwr", 7, IDEAL),
    ("jvLLMQQcdfgfihhiikjiatavvcj", 9, IDEAL),
    ("mLLvAMLQQbeghgikkljlklxptavratieivs", 12, IDEAL),
    ("mLLLvMQMQceghhikijlklliixvvjiroaplj", 12, IDEAL),
    ("gLLAQbdedfffdwmfarv", 6, IDEAL),
    ("hLvAQkbefgefggpphemxwn", 7, IDEAL),
    ("jvLLMQQdfghgfhiiicaheatebbg", 9, IDEAL),
    ("lvLPLPMQcefggihjkjikkfauuqafljnue", 11, IDEAL),
    ("oLvwLLQPAQcadhgklijmmlknnnnankqaaaisrktqm", 14, IDEAL),
    ("hLLAMkbedefgggtlftavkb", 7, IDEAL),
    ("hLLLQkcdefegggioaainfr", 7, IDEAL),
    ("iLLLAQcbcfgghfhhhohaimjma", 8, IDEAL),
    ("jLLLLQQbcgiihhighmsmksknnrf", 9, IDEAL),
    ("mLvvAMMQQbfijhjhkjlkllmahcvkopnqtqb", 12, IDEAL),
    ("mLvLLMAQQbefgikjlijlklmpmkvxfavvhur", 12, IDEAL),
    ("iLLvQQccdeggfhhhdoldgrgnk", 8, IDEAL),
    ("mLLLPwMPQacffghjkljkllnsgsjaajawbpp", 12, IDEAL),
    ("mLLPPvPMQaceffgikjjlllnsxgsacaxaccv", 12, IDEAL),
    ("nLLPPLvMQkaceffghlkmlmmlnsxgsareebffbb", 13, IDEAL),
    ("nLLPPLvQPkaceffghkjlllmmnsxgsarxdafnmj", 13, IDEAL),
    ("iLLPzQcbcffghghhmomtdirhx", 8, IDEAL),
    ("kLLvMMQkcdgighjijijioeckracdst", 10, IDEAL),
    ("nvLLvAQQPkeghilikjkljmmmoqmakockfkchah", 13, IDEAL),
    ("mLLvzMAQQccgihkijjllkliviwvavxxaabf", 12, IDEAL),
    ("pLLLLvPMQPQccfgmhjknlmlomooivarlfaiaifnafix", 15, IDEAL),
]

# Homology ground truth used by the acceptance suite: trivial H1 for the
# 3-sphere examples, cyclic groups for the lens-space family endpoints,
# and Z for the trefoil complement.
TRIVIAL_H1 = [
    "cMcabbgqs",
    "uLLvQQvLAPvPAQccdfeghhgmklnorsqssttthsaaggggaaaaaaanaaagb",
    "tLvLvAPMLwPQQkcfhfikjlopqpqssrqsrrupjjvvvhaavkbhevkmff",
    "wLvvvQvvAAMMQQQkalkjnmrlprpqvqvvtstsuuunaaaqqaxggggagaakkcwiti",
    "sLvAAvLAzMMQQcdceflkmjmqonprqprrhvrqnkkkksqeekocksf",
]

CYCLIC_H1 = [
    ("mLvwLLQQQadjljgilkilkknaqlabamaqacv", 6),
    ("nvLLMMAwQkcdghghjikmllmmnkpmigoriulkkn", 9),
    ("qLvwLPLvQQQkadhgkiknopknopponjajcxacsvvocvvvvc", 11),
    ("rvLLALwwLQQQccdgfkhkoqpqpononpqnkpisnsaaaanngngns", 13),
    ("uLvwvAvLzQPQQQcadigooqmoslrprtsprtstnaaoqovfctkfkfqlkfxta", 16),
]

# Complexity ground truth: (signature, bad-edge property context aside,
# the full tuple as printed).
COMPLEXITY_ROWS = [
    ("cMcabbgqs", (2, 5, 4, 2)),          # core edges in the 3-sphere seed
    ("cPcbbbadu", (1, 8, 7, 2)),          # tunnel edge in the trefoil seed
    ("fLLQcaceeedjkuxkj", (4, 2, 2, 5)),  # fibre edges in the SFS seed
]

# The row whose table entry repeats another knot's seed; kept out of CORPUS.
KNOWN_TYPO_SIGS = ["cMcbbbadu"]
