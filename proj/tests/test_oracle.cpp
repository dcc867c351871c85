#include <doctest.h>

#include "edist/errors.hpp"
#include "edist/families.hpp"
#include "edist/oracle.hpp"
#include "edist/product.hpp"
#include "edist/transducer.hpp"
#include "helpers.hpp"

using namespace edist;
using namespace edist::testing;

TEST_CASE("enumerate_language") {
    Nfa a3 = gen_family_a(3);
    WordSet ws = enumerate_language(a3, 6);
    CHECK(ws.words == std::vector<Word>{a3.alphabet().word_from_chars("00"),
                                        a3.alphabet().word_from_chars("00100")});

    Alphabet sigma = Alphabet::from_chars("a");
    Nfa empty(sigma, 1, 0, {}, {});
    CHECK(enumerate_language(empty, 5).words.empty());

    Nfa b3 = gen_family_b(3);
    WordSet b = enumerate_language(b3, 3);
    CHECK(b.words == std::vector<Word>{b3.alphabet().word_from_chars("000"),
                                       b3.alphabet().word_from_chars("101")});
}

TEST_CASE("brute_inner_distance") {
    Alphabet sigma = Alphabet::from_chars("ab");
    CHECK(brute_inner_distance(nfa_for_words(sigma, {"aa", "ab", "bbb"}), 6) == 1);
    CHECK(brute_inner_distance(gen_family_b(3), 3) == 2);
    CHECK(brute_inner_distance(nfa_for_words(sigma, {"a", "aaa"}), 6) == 2);
    CHECK_THROWS_AS(brute_inner_distance(nfa_for_words(sigma, {"ab"}), 6), TwoWordsRequiredError);
}

TEST_CASE("brute_outputs") {
    Alphabet sigma = Alphabet::from_chars("ab");
    // identity transducer
    Transducer id(sigma, sigma, 1, 0, {0},
                  {{0, Label(0), Label(0), 0}, {0, Label(1), Label(1), 0}});
    CHECK(brute_outputs(id, W(sigma, "ab"), 4).words == std::vector<Word>{W(sigma, "ab")});

    Transducer iat1 = input_altering_transducer(1, sigma);
    CHECK(brute_outputs(iat1, W(sigma, "a"), 2).words ==
          std::vector<Word>{Word{}, W(sigma, "b")});

    Transducer ch1 = channel_transducer(1, sigma);
    CHECK(brute_outputs(ch1, W(sigma, "a"), 2).words ==
          std::vector<Word>{Word{}, W(sigma, "a"), W(sigma, "b"), W(sigma, "aa"), W(sigma, "ab"),
                            W(sigma, "ba")});
}

TEST_CASE("brute_is_functional") {
    Alphabet sigma = Alphabet::from_chars("ab");
    Transducer id(sigma, sigma, 1, 0, {0},
                  {{0, Label(0), Label(0), 0}, {0, Label(1), Label(1), 0}});
    CHECK(brute_is_functional(id, 4));

    Transducer ch1 = channel_transducer(1, sigma);
    CHECK_FALSE(brute_is_functional(ch1, 2));

    Transducer det = detect_product(ch1, nfa_for_words(sigma, {"ab"}));
    CHECK(brute_is_functional(det, 4));
}

TEST_CASE("channel outputs are exactly the words within distance k") {
    Alphabet sigma = Alphabet::from_chars("ab");
    std::vector<Word> words = all_words(2, 4);
    for (unsigned k = 1; k <= 2; ++k) {
        Transducer ch = channel_transducer(k, sigma);
        for (const Word& u : words) {
            WordSet outs = brute_outputs(ch, u, 4);
            for (const Word& v : words) {
                bool within = edit_distance_words(u, v) <= k;
                CHECK(outs.contains(v) == within);
            }
        }
    }
}
