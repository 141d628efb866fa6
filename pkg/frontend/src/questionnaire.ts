/** The goal questionnaire: collect one yes/no answer per question and
 * summarize the server's verdict for display. */

import { formatList, titleFromSnake } from "./format.js";
import type { Question, ValidationResponse, VisGoalName } from "./types.js";

export class QuestionnaireSession {
  private readonly answers = new Map<VisGoalName, boolean>();

  constructor(readonly questions: readonly Question[]) {}

  answer(goal: VisGoalName, yes: boolean): void {
    if (!this.questions.some((q) => q.goal === goal)) {
      throw new Error(`no question asks about ${goal}`);
    }
    this.answers.set(goal, yes);
  }

  answerAll(yes: boolean): void {
    for (const question of this.questions) {
      this.answers.set(question.goal, yes);
    }
  }

  unanswered(): VisGoalName[] {
    return this.questions
      .map((q) => q.goal)
      .filter((goal) => !this.answers.has(goal));
  }

  get complete(): boolean {
    return this.unanswered().length === 0;
  }

  /** Wire format for POST .../validate. */
  toAnswers(): Record<string, boolean> {
    if (!this.complete) {
      throw new Error(
        `unanswered goals: ${formatList(this.unanswered())}`,
      );
    }
    const body: Record<string, boolean> = {};
    for (const [goal, yes] of this.answers) {
      body[goal] = yes;
    }
    return body;
  }
}

/** One-line verdict, e.g. "Validated" or
 * "Requires revision (failed goals: Comparison)". */
export function summarizeValidation(result: ValidationResponse): string {
  if (result.status === "validated") {
    return "Validated";
  }
  return `Requires revision (failed goals: ${formatList(result.failed_goals)})`;
}

export function describeQuestion(question: Question): string {
  return `${titleFromSnake(question.goal)}: ${question.text}`;
}
