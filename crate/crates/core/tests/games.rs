use prefix_normal::enumeration::count_prefix_normal;
use prefix_normal::games::{
    count_block_outcomes, solve_from, solve_game_v1, solve_unmemoized, verify_block_lemma_detailed,
    BlockGameConfig, GameState, Player,
};
use prefix_normal::{is_prefix_normal, Budget};

#[test]
fn memoized_solver_agrees_with_plain_minimax() {
    let b = Budget::default();
    for n in 1..=8 {
        let start = GameState::new(n);
        assert_eq!(
            solve_game_v1(n, &b).unwrap().winner,
            solve_unmemoized(&start),
            "n={n}"
        );
    }
    // A few mid-game positions as well.
    for text in ["1______", "0______", "__1____", "1_0____", "10_____"] {
        let s: GameState = text.parse().unwrap();
        assert_eq!(
            solve_from(&s, &b).unwrap().winner,
            solve_unmemoized(&s),
            "{text}"
        );
    }
}

#[test]
fn principal_variation_replays() {
    let b = Budget::default();
    for n in 1..=9 {
        let result = solve_game_v1(n, &b).unwrap();
        let mut state = GameState::new(n);
        for &mv in &result.principal_variation {
            state.apply(mv).unwrap();
            // The stated winner keeps winning along the line.
            assert_eq!(memo_winner(&state), result.winner);
        }
        let word = state.to_word().unwrap();
        assert_eq!(word, result.final_word);
        assert_eq!(is_prefix_normal(&word), result.winner == Player::Alice);
    }
}

fn memo_winner(state: &GameState) -> Player {
    solve_from(state, &Budget::default()).unwrap().winner
}

#[test]
fn bob_wins_beyond_six() {
    let b = Budget::default();
    for n in 7..=11 {
        assert_eq!(solve_game_v1(n, &b).unwrap().winner, Player::Bob, "n={n}");
    }
}

#[test]
fn block_game_outcomes() {
    let b = Budget::default();
    let counts = count_prefix_normal(24, &b).unwrap();
    for (n, k) in [
        (4, 1),
        (6, 1),
        (8, 1),
        (10, 1),
        (12, 1),
        (8, 2),
        (12, 2),
        (16, 2),
        (12, 3),
        (18, 3),
    ] {
        let config = BlockGameConfig::new(n, k).unwrap();
        let outcomes = count_block_outcomes(&config, &b).unwrap();
        assert!(counts.pnw(n) >= outcomes, "n={n} k={k}");
        if config.blocks() <= 3 && k <= 2 {
            let v = verify_block_lemma_detailed(&config, &b).unwrap();
            assert!(v.holds(), "n={n} k={k}: {:?}", v.counterexample);
        }
    }
}
